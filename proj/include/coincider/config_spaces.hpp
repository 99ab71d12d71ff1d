#pragma once

#include "coincider/group.hpp"
#include "coincider/orbit_tuple.hpp"
#include "coincider/patterns.hpp"

namespace coincider {

/// Witness that the maximum of a scalar tuple is attained on exactly the
/// index set M, |M| = m, with strict separation from the rest.
struct TopBlockResult {
  int m = 0;
  GroupSubset M;
};

/// True iff some k coordinate vectors of phi are pairwise equal.
bool in_kwise_diagonal(const RationalTuple& phi, int k);
bool in_kwise_diagonal(const FloatTuple& phi, int k, const ClusterOptions& opts = {});

/// True iff the maximum value is attained at >= k coordinates. Scalar only.
bool in_max_diagonal(const RationalTuple& phi, int k);
bool in_max_diagonal(const FloatTuple& phi, int k, const ClusterOptions& opts = {});

/// phi(g) > phi(h) for every g in M and h outside M, strictly.
bool in_top_block_set(const RationalTuple& phi, const GroupSubset& M);

/// Multiplicity m and index set M of the strict maximum. Requires that phi
/// avoids the k-wise maximum diagonal; guarantees m <= k-1.
TopBlockResult top_block_classify(const RationalTuple& phi, int k);
TopBlockResult top_block_classify(const FloatTuple& phi, int k, const ClusterOptions& opts = {});

/// The unique k-element block of a tuple with a k-fold but no (k+1)-fold
/// coincidence; requires k > q/2 so uniqueness is forced.
GroupSubset majority_block(const RationalTuple& phi, int k);
GroupSubset majority_block(const FloatTuple& phi, int k, const ClusterOptions& opts = {});

}  // namespace coincider
