#include "coincider/fp_matrix.hpp"

#include <algorithm>
#include <string>

#include "coincider/errors.hpp"

namespace coincider {

namespace {

int mod_inverse(int a, int p) {
  // Fermat: a^(p-2) mod p for prime p.
  long long base = a % p, result = 1;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

}  // namespace

int fp_rank(std::vector<std::vector<int>> mat, int p) {
  if (mat.empty()) return 0;
  const int rows = static_cast<int>(mat.size());
  const int cols = static_cast<int>(mat[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (mat[r][col] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(mat[pivot], mat[rank]);
    const long long inv = mod_inverse(mat[rank][col] % p, p);
    for (int c = col; c < cols; ++c) mat[rank][c] = static_cast<int>(mat[rank][c] * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || mat[r][col] % p == 0) continue;
      const long long f = mat[r][col] % p;
      for (int c = col; c < cols; ++c) {
        mat[r][c] = static_cast<int>(((mat[r][c] - f * mat[rank][c]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

SparseColumn column_axpy(const SparseColumn& c, int lambda, const SparseColumn& other, int p) {
  SparseColumn out;
  out.reserve(c.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < other.size()) {
    if (j == other.size() || (i < c.size() && c[i].first < other[j].first)) {
      out.push_back(c[i++]);
    } else if (i == c.size() || other[j].first < c[i].first) {
      const int v = static_cast<int>(((-static_cast<long long>(lambda) * other[j].second) % p + p) % p);
      if (v != 0) out.emplace_back(other[j].first, v);
      ++j;
    } else {
      const int v =
          static_cast<int>(((c[i].second - static_cast<long long>(lambda) * other[j].second) % p + p) % p);
      if (v != 0) out.emplace_back(c[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void ChainComplexFp::validate() const {
  if (boundary.size() != cells.size()) {
    throw InvalidInputError("chain complex needs one boundary map per dimension");
  }
  for (int t = 0; t <= top_dim(); ++t) {
    if (static_cast<long long>(boundary[t].size()) != cells[t]) {
      throw InvalidInputError("boundary matrix column count mismatch in dimension " +
                              std::to_string(t));
    }
    const long long rows_below = t == 0 ? 1 : cells[t - 1];
    for (const SparseColumn& col : boundary[t]) {
      int prev_row = -1;
      for (const auto& [row, coeff] : col) {
        if (row <= prev_row || row >= rows_below) {
          throw InvalidInputError("boundary column rows not sorted / out of range");
        }
        if (coeff <= 0 || coeff >= p) throw InvalidInputError("boundary coefficient out of [1,p)");
        prev_row = row;
      }
    }
  }
  // d(d(x)) = 0: push each column of boundary[t] through boundary[t-1].
  for (int t = 1; t <= top_dim(); ++t) {
    for (const SparseColumn& col : boundary[t]) {
      SparseColumn acc;
      for (const auto& [row, coeff] : col) {
        acc = column_axpy(acc, p - coeff, boundary[t - 1][row], p);
      }
      if (!acc.empty()) {
        throw InvalidInputError("boundary of boundary is nonzero in dimension " + std::to_string(t));
      }
    }
  }
}

std::vector<long long> ChainComplexFp::reduced_betti() const {
  const int D = top_dim();
  std::vector<long long> rank_of(D + 2, 0);  // rank_of[t] = rank boundary[t]
  // cleared[t][j]: column j of boundary[t] is known to reduce to zero because
  // row j was a pivot row of the reduced boundary[t+1].
  std::vector<char> cleared_next;

  for (int t = D; t >= 0; --t) {
    const long long n_rows = t == 0 ? 1 : cells[t - 1];
    std::vector<int> pivot_owner(static_cast<std::size_t>(n_rows), -1);
    std::vector<SparseColumn> reduced;
    reduced.reserve(boundary[t].size());
    std::vector<char> cleared_here(static_cast<std::size_t>(n_rows), 0);
    long long rank = 0;
    for (std::size_t j = 0; j < boundary[t].size(); ++j) {
      if (j < cleared_next.size() && cleared_next[j]) continue;
      SparseColumn col = boundary[t][j];
      while (!col.empty()) {
        const int low = col.back().first;
        const int owner = pivot_owner[low];
        if (owner < 0) break;
        const int lambda = static_cast<int>(static_cast<long long>(col.back().second) *
                                            mod_inverse(reduced[owner].back().second, p) % p);
        col = column_axpy(col, lambda, reduced[owner], p);
      }
      if (!col.empty()) {
        pivot_owner[col.back().first] = static_cast<int>(reduced.size());
        cleared_here[col.back().first] = 1;
        reduced.push_back(std::move(col));
        ++rank;
      }
    }
    rank_of[t] = rank;
    cleared_next = std::move(cleared_here);
  }

  std::vector<long long> betti(D + 2, 0);
  betti[0] = 1 - rank_of[0];  // beta~_{-1}
  for (int t = 0; t <= D; ++t) betti[t + 1] = cells[t] - rank_of[t] - rank_of[t + 1];
  return betti;
}

}  // namespace coincider
