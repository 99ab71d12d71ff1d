#pragma once

#include <vector>

#include "coincider/group.hpp"
#include "coincider/orbit_tuple.hpp"

namespace coincider {

/// A set partition of {0..q-1} in canonical form: every block is sorted
/// ascending and blocks are ordered by their least element.
struct CoincidencePattern {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int ground_size() const;
  int max_block_size() const;

  bool operator==(const CoincidencePattern& other) const { return blocks == other.blocks; }
};

/// Builds the canonical pattern from a block-index assignment (value v at
/// position i means "i belongs to block labeled v"; labels are arbitrary).
CoincidencePattern pattern_from_assignment(const std::vector<int>& assignment);

/// Relabels indices through i -> g*i and re-canonicalizes.
CoincidencePattern pattern_apply(const GroupTable& group, int g, const CoincidencePattern& P);

/// All partitions of {0..q-1} with exactly k blocks (restricted growth strings).
std::vector<CoincidencePattern> enumerate_patterns(int q, int k);

/// Patterns with exactly k blocks fixed by every translation i -> g*i.
std::vector<CoincidencePattern> pattern_action_fixed_points(const GroupPtr& group, int k);

/// Tolerances for float coincidence detection. Two coordinates coincide when
/// their max-norm distance is <= cluster_eps; a cross-cluster distance inside
/// (cluster_eps, ambiguity_hi) makes the pattern ambiguous. ambiguity_hi < 0
/// means "10 * cluster_eps".
struct ClusterOptions {
  double cluster_eps = 1e-9;
  double ambiguity_hi = -1.0;
};

/// Equality classes of the q coordinate vectors. Exact comparison.
CoincidencePattern coincidence_pattern(const RationalTuple& phi);

/// Transitive closure of eps-closeness; throws AmbiguousPatternError when a
/// cross-cluster distance falls in the ambiguity band.
CoincidencePattern coincidence_pattern(const FloatTuple& phi, const ClusterOptions& opts = {});

}  // namespace coincider
