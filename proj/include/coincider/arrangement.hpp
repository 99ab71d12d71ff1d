#pragma once

#include <string>
#include <vector>

#include "coincider/patterns.hpp"
#include "coincider/ratmat.hpp"

namespace coincider {

/// A finite family of linear subspaces of R^ambient, each spanned by the
/// rows of a full-row-rank rational basis matrix.
struct SubspaceArrangement {
  int ambient = 0;
  std::vector<RatMat> subspaces;
  std::string family = "custom";  // "k-equal" | "v1" | "custom"
  int q = 0, k = 0, m = 0;        // family parameters when applicable

  /// Checks full row rank and pairwise distinct row spaces.
  void validate() const;
};

/// The (q choose k) subspaces {y : y_{i1} = ... = y_{ik}} of R^q.
SubspaceArrangement k_equal_arrangement(int q, int k);

/// Subspaces of R^(mq) (coordinate (t,c) stored at index t*m + c): the first
/// components agree on a k-subset of positions and the remaining (m-1)-blocks
/// agree across all positions. Each has dimension m + q - k.
SubspaceArrangement v1_arrangement(int m, int q, int k);

/// One intersection of a subfamily, ordered by reverse inclusion.
struct LatticeElement {
  RatMat basis;             // RREF rows spanning the subspace
  int codim = 0;
  std::vector<int> covers;  // indices of elements covering this one
};

/// All distinct intersections of subfamilies, bottom = ambient space first,
/// then sorted by (codim, basis key).
struct ArrangementLattice {
  int ambient = 0;
  std::vector<LatticeElement> elements;
  std::vector<std::vector<char>> below;  // below[i][j]: i < j strictly

  int size() const { return static_cast<int>(elements.size()); }
  bool less(int i, int j) const { return below[i][j] != 0; }

  /// Elements z with bottom < z < x.
  std::vector<int> open_interval_below(int x) const;
};

ArrangementLattice intersection_lattice(const SubspaceArrangement& a);

/// The coordinate-equality pattern forced on a subspace: i and j share a
/// block iff y_i = y_j for every y in the row space (columns i, j equal).
CoincidencePattern forced_equalities(const RatMat& basis, int ambient);

/// Independent count of partitions of {0..q-1} whose blocks have size 1 or
/// >= k; for the k-equal arrangement this must equal the lattice size.
long long admissible_partition_count(int q, int k);

}  // namespace coincider
