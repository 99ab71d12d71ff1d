#include "coincider/ratmat.hpp"

#include <utility>

#include "coincider/errors.hpp"

namespace coincider {

RatMat::RatMat(int r, int c, std::vector<Rational> data) : rows(r), cols(c), a(std::move(data)) {
  if (a.size() != static_cast<std::size_t>(r) * c) {
    throw InvalidInputError("matrix data size does not match shape");
  }
}

RatMat rref(const RatMat& m) {
  RatMat w = m;
  int lead = 0;
  int r = 0;
  for (; r < w.rows && lead < w.cols; ++lead) {
    int pivot = -1;
    for (int i = r; i < w.rows; ++i) {
      if (w.at(i, lead) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int c = 0; c < w.cols; ++c) std::swap(w.at(pivot, c), w.at(r, c));
    }
    const Rational inv = Rational(1) / w.at(r, lead);
    for (int c = lead; c < w.cols; ++c) w.at(r, c) *= inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == r || w.at(i, lead) == 0) continue;
      const Rational f = w.at(i, lead);
      for (int c = lead; c < w.cols; ++c) w.at(i, c) -= f * w.at(r, c);
    }
    ++r;
  }
  RatMat out(r, w.cols);
  for (int i = 0; i < r; ++i) {
    for (int c = 0; c < w.cols; ++c) out.at(i, c) = w.at(i, c);
  }
  return out;
}

int rank(const RatMat& m) { return rref(m).rows; }

RatMat nullspace(const RatMat& m) {
  const RatMat r = rref(m);
  std::vector<int> pivot_col;
  pivot_col.reserve(r.rows);
  for (int i = 0; i < r.rows; ++i) {
    int c = 0;
    while (c < r.cols && r.at(i, c) == 0) ++c;
    pivot_col.push_back(c);
  }
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;

  RatMat out(m.cols - r.rows, m.cols);
  int row = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.at(row, free_col) = 1;
    for (int i = 0; i < r.rows; ++i) out.at(row, pivot_col[i]) = -r.at(i, free_col);
    ++row;
  }
  return out;
}

RatMat stack(const RatMat& u, const RatMat& v) {
  if (u.cols != v.cols) throw InvalidInputError("stack requires equal column counts");
  RatMat out(u.rows + v.rows, u.cols);
  for (int i = 0; i < u.rows; ++i) {
    for (int c = 0; c < u.cols; ++c) out.at(i, c) = u.at(i, c);
  }
  for (int i = 0; i < v.rows; ++i) {
    for (int c = 0; c < v.cols; ++c) out.at(u.rows + i, c) = v.at(i, c);
  }
  return out;
}

RatMat row_space_intersection(const RatMat& u, const RatMat& v) {
  if (u.cols != v.cols) throw InvalidInputError("intersection requires equal ambient dimension");
  // Left kernel of [u over v]: coefficient rows (a | b) with a*u + b*v = 0;
  // each such a*u = -(b*v) lies in both row spaces, and these span the
  // intersection.
  const RatMat stacked = stack(u, v);
  RatMat transposed(stacked.cols, stacked.rows);
  for (int i = 0; i < stacked.rows; ++i) {
    for (int c = 0; c < stacked.cols; ++c) transposed.at(c, i) = stacked.at(i, c);
  }
  const RatMat kernel = nullspace(transposed);
  RatMat combos(kernel.rows, u.cols);
  for (int i = 0; i < kernel.rows; ++i) {
    for (int c = 0; c < u.cols; ++c) {
      Rational s = 0;
      for (int j = 0; j < u.rows; ++j) s += kernel.at(i, j) * u.at(j, c);
      combos.at(i, c) = s;
    }
  }
  return rref(combos);
}

bool row_space_contains(const RatMat& outer, const RatMat& inner) {
  if (outer.cols != inner.cols) throw InvalidInputError("containment requires equal ambient dimension");
  return rank(outer) == rank(stack(outer, inner));
}

std::string row_space_key(const RatMat& m) {
  const RatMat r = rref(m);
  std::string key = std::to_string(r.rows) + "x" + std::to_string(r.cols);
  for (const Rational& x : r.a) {
    key += ';';
    key += x.str();
  }
  return key;
}

}  // namespace coincider
