#include "coincider/config_spaces.hpp"

#include <algorithm>

#include "coincider/errors.hpp"

namespace coincider {

namespace {

void check_k(int q, int k) {
  if (k < 2 || k > q) {
    throw InvalidInputError("k must satisfy 2 <= k <= q, got k=" + std::to_string(k) +
                            " for q=" + std::to_string(q));
  }
}

void check_scalar(int dim) {
  if (dim != 1) throw InvalidInputError("operation requires a dim-1 tuple");
}

// Indices of the block containing the coordinate with the largest value.
// For floats the pattern has already merged eps-close values, so "largest"
// is evaluated on representatives; any member of the block serves.
template <typename Scalar>
std::vector<int> top_block(const OrbitTuple<Scalar>& phi, const CoincidencePattern& pattern) {
  int best_block = 0;
  bool first = true;
  for (int b = 0; b < pattern.block_count(); ++b) {
    const int rep = pattern.blocks[b].front();
    if (first || phi.at(rep) > phi.at(pattern.blocks[best_block].front())) {
      best_block = b;
      first = false;
    }
  }
  return pattern.blocks[best_block];
}

template <typename Scalar>
TopBlockResult classify(const OrbitTuple<Scalar>& phi, int k, const CoincidencePattern& pattern) {
  check_scalar(phi.dim);
  check_k(phi.group->order(), k);
  const std::vector<int> top = top_block(phi, pattern);
  if (static_cast<int>(top.size()) >= k) {
    throw NotInWError("maximum attained at " + std::to_string(top.size()) +
                      " coordinates, not below k=" + std::to_string(k));
  }
  TopBlockResult out;
  out.m = static_cast<int>(top.size());
  out.M = GroupSubset(phi.group, top);
  return out;
}

GroupSubset majority_from_pattern(const GroupPtr& group, const CoincidencePattern& pattern, int k) {
  const int q = group->order();
  if (2 * k <= q) {
    throw KTooSmallError("majority block needs k > q/2, got k=" + std::to_string(k) +
                         " for q=" + std::to_string(q));
  }
  const int largest = pattern.max_block_size();
  if (largest < k) throw NotInStratumError("no k-fold coincidence present");
  if (largest > k) throw NotInStratumError("coincidence is more than k-fold");
  for (const auto& block : pattern.blocks) {
    if (static_cast<int>(block.size()) == k) return GroupSubset(group, block);
  }
  throw NotInStratumError("no k-element block");  // unreachable
}

}  // namespace

bool in_kwise_diagonal(const RationalTuple& phi, int k) {
  check_k(phi.group->order(), k);
  return coincidence_pattern(phi).max_block_size() >= k;
}

bool in_kwise_diagonal(const FloatTuple& phi, int k, const ClusterOptions& opts) {
  check_k(phi.group->order(), k);
  return coincidence_pattern(phi, opts).max_block_size() >= k;
}

bool in_max_diagonal(const RationalTuple& phi, int k) {
  check_scalar(phi.dim);
  check_k(phi.group->order(), k);
  return static_cast<int>(top_block(phi, coincidence_pattern(phi)).size()) >= k;
}

bool in_max_diagonal(const FloatTuple& phi, int k, const ClusterOptions& opts) {
  check_scalar(phi.dim);
  check_k(phi.group->order(), k);
  return static_cast<int>(top_block(phi, coincidence_pattern(phi, opts)).size()) >= k;
}

bool in_top_block_set(const RationalTuple& phi, const GroupSubset& M) {
  check_scalar(phi.dim);
  const int q = phi.group->order();
  if (M.size() == 0 || M.size() == q) return false;
  for (int g = 0; g < q; ++g) {
    if (!M.contains(g)) continue;
    for (int h = 0; h < q; ++h) {
      if (M.contains(h)) continue;
      if (!(phi.at(g) > phi.at(h))) return false;
    }
  }
  return true;
}

TopBlockResult top_block_classify(const RationalTuple& phi, int k) {
  return classify(phi, k, coincidence_pattern(phi));
}

TopBlockResult top_block_classify(const FloatTuple& phi, int k, const ClusterOptions& opts) {
  return classify(phi, k, coincidence_pattern(phi, opts));
}

GroupSubset majority_block(const RationalTuple& phi, int k) {
  return majority_from_pattern(phi.group, coincidence_pattern(phi), k);
}

GroupSubset majority_block(const FloatTuple& phi, int k, const ClusterOptions& opts) {
  return majority_from_pattern(phi.group, coincidence_pattern(phi, opts), k);
}

}  // namespace coincider
