#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace coincider {

/// Rank of a dense matrix over F_p via Gaussian elimination. Entries must
/// already be reduced into [0, p).
int fp_rank(std::vector<std::vector<int>> mat, int p);

/// Sparse column: (row, coefficient) pairs sorted by row, coefficients in
/// [1, p).
using SparseColumn = std::vector<std::pair<int, int>>;

/// c -= lambda * other (mod p), merging sorted columns.
SparseColumn column_axpy(const SparseColumn& c, int lambda, const SparseColumn& other, int p);

/// A chain complex over F_p given by sparse boundary matrices. Dimension t
/// cells are indexed 0..cells[t]-1; boundary[t] maps C_t -> C_{t-1} and is
/// stored column-wise (boundary[t][j] = sparse column of cell j). boundary[0]
/// is the augmentation onto the empty simplex (a single dim -1 cell).
struct ChainComplexFp {
  int p = 2;
  std::vector<long long> cells;                      // cells[t] = N_t, t >= 0
  std::vector<std::vector<SparseColumn>> boundary;   // boundary[t], t = 0..D

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }

  /// Checks boundary-of-boundary = 0 in every dimension; throws on failure.
  void validate() const;

  /// Reduced Betti numbers; entry [t+1] is beta~_t, so [0] is beta~_{-1}.
  /// Uses column reduction with clearing, top dimension first.
  std::vector<long long> reduced_betti() const;
};

}  // namespace coincider
