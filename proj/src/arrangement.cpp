#include "coincider/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coincider/errors.hpp"

namespace coincider {

void SubspaceArrangement::validate() const {
  std::set<std::string> keys;
  for (const RatMat& s : subspaces) {
    if (s.cols != ambient) throw InvalidInputError("subspace ambient dimension mismatch");
    if (rank(s) != s.rows) throw InvalidInputError("subspace basis is not full row rank");
    if (!keys.insert(row_space_key(s)).second) {
      throw InvalidInputError("arrangement contains duplicate subspaces");
    }
  }
}

SubspaceArrangement k_equal_arrangement(int q, int k) {
  if (k < 2 || k > q || q > 8) {
    throw InvalidInputError("k-equal arrangement requires 2 <= k <= q <= 8");
  }
  SubspaceArrangement a;
  a.ambient = q;
  a.family = "k-equal";
  a.q = q;
  a.k = k;
  for (std::uint64_t mask : enumerate_subsets(q, k)) {
    RatMat basis(q - k + 1, q);
    int row = 0;
    for (int i = 0; i < q; ++i) {
      if ((mask >> i) & 1u) basis.at(0, i) = 1;  // shared value on the k-subset
    }
    ++row;
    for (int i = 0; i < q; ++i) {
      if (!((mask >> i) & 1u)) basis.at(row++, i) = 1;
    }
    a.subspaces.push_back(std::move(basis));
  }
  a.validate();
  return a;
}

SubspaceArrangement v1_arrangement(int m, int q, int k) {
  if (m < 2) throw InvalidInputError("v1 arrangement requires m >= 2");
  if (k < 2 || k > q) throw InvalidInputError("v1 arrangement requires 2 <= k <= q");
  if (m * q > 16) throw InvalidInputError("v1 arrangement ambient mq must be <= 16");
  SubspaceArrangement a;
  a.ambient = m * q;
  a.family = "v1";
  a.q = q;
  a.k = k;
  a.m = m;
  const auto idx = [m](int t, int c) { return t * m + c; };
  for (std::uint64_t mask : enumerate_subsets(q, k)) {
    RatMat basis(m + q - k, m * q);
    int row = 0;
    for (int t = 0; t < q; ++t) {
      if ((mask >> t) & 1u) basis.at(0, idx(t, 0)) = 1;  // shared first component
    }
    ++row;
    for (int t = 0; t < q; ++t) {
      if (!((mask >> t) & 1u)) basis.at(row++, idx(t, 0)) = 1;
    }
    for (int c = 1; c < m; ++c) {
      for (int t = 0; t < q; ++t) basis.at(row, idx(t, c)) = 1;  // shared tail component
      ++row;
    }
    a.subspaces.push_back(std::move(basis));
  }
  a.validate();
  return a;
}

namespace {

// True iff every row of inner lies in the row space given by outer_rref.
bool rref_contains(const RatMat& outer_rref, const RatMat& inner) {
  std::vector<int> pivot_col(outer_rref.rows);
  for (int i = 0; i < outer_rref.rows; ++i) {
    int c = 0;
    while (c < outer_rref.cols && outer_rref.at(i, c) == 0) ++c;
    pivot_col[i] = c;
  }
  std::vector<Rational> row(inner.cols);
  for (int r = 0; r < inner.rows; ++r) {
    for (int c = 0; c < inner.cols; ++c) row[c] = inner.at(r, c);
    for (int i = 0; i < outer_rref.rows; ++i) {
      const Rational f = row[pivot_col[i]];
      if (f == 0) continue;
      for (int c = pivot_col[i]; c < inner.cols; ++c) row[c] -= f * outer_rref.at(i, c);
    }
    for (const Rational& x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

}  // namespace

ArrangementLattice intersection_lattice(const SubspaceArrangement& a) {
  if (a.subspaces.size() > 64) throw InvalidInputError("at most 64 subspaces supported");
  a.validate();

  // Atoms in RREF form, then close under intersection with atoms.
  std::vector<RatMat> atoms;
  atoms.reserve(a.subspaces.size());
  for (const RatMat& s : a.subspaces) atoms.push_back(rref(s));

  std::map<std::string, int> index_of_key;
  std::vector<RatMat> spaces;
  RatMat ambient_basis(a.ambient, a.ambient);
  for (int i = 0; i < a.ambient; ++i) ambient_basis.at(i, i) = 1;
  spaces.push_back(ambient_basis);
  index_of_key[row_space_key(ambient_basis)] = 0;

  std::vector<int> worklist;
  const auto add_space = [&](RatMat basis) {
    const std::string key = row_space_key(basis);
    auto [it, inserted] = index_of_key.emplace(key, static_cast<int>(spaces.size()));
    if (inserted) {
      spaces.push_back(std::move(basis));
      worklist.push_back(it->second);
    }
    return it->second;
  };
  for (const RatMat& atom : atoms) add_space(atom);

  for (std::size_t w = 0; w < worklist.size(); ++w) {
    const RatMat current = spaces[worklist[w]];  // copy: spaces may reallocate
    for (const RatMat& atom : atoms) {
      if (rref_contains(current, atom) || rref_contains(atom, current)) continue;
      add_space(row_space_intersection(current, atom));
    }
  }

  // Deterministic order: bottom first, then by (codim, key).
  std::vector<int> order(spaces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<std::string> keys(spaces.size());
  std::vector<int> codims(spaces.size());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    keys[i] = row_space_key(spaces[i]);
    codims[i] = a.ambient - spaces[i].rows;
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (codims[x] != codims[y]) return codims[x] < codims[y];
    return keys[x] < keys[y];
  });

  ArrangementLattice lat;
  lat.ambient = a.ambient;
  lat.elements.resize(spaces.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    lat.elements[pos].basis = spaces[order[pos]];
    lat.elements[pos].codim = codims[order[pos]];
  }

  const int n = lat.size();
  lat.below.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (lat.elements[i].codim >= lat.elements[j].codim) continue;
      // i < j in the lattice iff subspace(j) is strictly inside subspace(i).
      if (rref_contains(lat.elements[i].basis, lat.elements[j].basis)) lat.below[i][j] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!lat.below[i][j]) continue;
      bool is_cover = true;
      for (int z = 0; z < n && is_cover; ++z) {
        if (lat.below[i][z] && lat.below[z][j]) is_cover = false;
      }
      if (is_cover) lat.elements[i].covers.push_back(j);
    }
  }
  return lat;
}

std::vector<int> ArrangementLattice::open_interval_below(int x) const {
  std::vector<int> out;
  for (int z = 1; z < size(); ++z) {
    if (z != x && less(z, x)) out.push_back(z);
  }
  return out;
}

CoincidencePattern forced_equalities(const RatMat& basis, int ambient) {
  std::vector<int> assignment(ambient);
  std::map<std::vector<Rational>, int> labels;
  for (int c = 0; c < ambient; ++c) {
    std::vector<Rational> column(basis.rows);
    for (int r = 0; r < basis.rows; ++r) column[r] = basis.at(r, c);
    auto [it, inserted] = labels.emplace(std::move(column), static_cast<int>(labels.size()));
    assignment[c] = it->second;
  }
  return pattern_from_assignment(assignment);
}

long long admissible_partition_count(int q, int k) {
  long long count = 0;
  for (int blocks = 1; blocks <= q; ++blocks) {
    for (const auto& pattern : enumerate_patterns(q, blocks)) {
      bool ok = true;
      for (const auto& block : pattern.blocks) {
        const int s = static_cast<int>(block.size());
        if (s != 1 && s < k) ok = false;
      }
      if (ok) ++count;
    }
  }
  return count;
}

}  // namespace coincider
