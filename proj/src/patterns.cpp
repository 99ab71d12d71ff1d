#include "coincider/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "coincider/errors.hpp"

namespace coincider {

int CoincidencePattern::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

int CoincidencePattern::max_block_size() const {
  std::size_t m = 0;
  for (const auto& b : blocks) m = std::max(m, b.size());
  return static_cast<int>(m);
}

CoincidencePattern pattern_from_assignment(const std::vector<int>& assignment) {
  std::map<int, std::vector<int>> by_label;
  for (int i = 0; i < static_cast<int>(assignment.size()); ++i) {
    by_label[assignment[i]].push_back(i);
  }
  CoincidencePattern out;
  out.blocks.reserve(by_label.size());
  for (auto& [label, block] : by_label) out.blocks.push_back(std::move(block));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

CoincidencePattern pattern_apply(const GroupTable& group, int g, const CoincidencePattern& P) {
  const int q = group.order();
  if (P.ground_size() != q) throw InvalidInputError("pattern size does not match group order");
  std::vector<int> assignment(q, -1);
  int label = 0;
  for (const auto& block : P.blocks) {
    for (int i : block) assignment[group.mult(g, i)] = label;
    ++label;
  }
  return pattern_from_assignment(assignment);
}

std::vector<CoincidencePattern> enumerate_patterns(int q, int k) {
  if (q < 1 || k < 1 || k > q) throw InvalidInputError("bad pattern enumeration bounds");
  std::vector<CoincidencePattern> out;
  std::vector<int> a(q, 0);  // restricted growth string
  // a[0] = 0; a[i] <= max(a[0..i-1]) + 1.
  while (true) {
    const int nblocks = *std::max_element(a.begin(), a.end()) + 1;
    if (nblocks == k) out.push_back(pattern_from_assignment(a));
    // Advance to the next restricted growth string.
    int i = q - 1;
    for (; i >= 1; --i) {
      const int prefix_max = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
      a[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<CoincidencePattern> pattern_action_fixed_points(const GroupPtr& group, int k) {
  const int q = group->order();
  if (k < 1 || k > q) throw InvalidInputError("block count out of range");
  std::vector<CoincidencePattern> fixed;
  for (const auto& P : enumerate_patterns(q, k)) {
    bool is_fixed = true;
    for (int g = 1; g < q && is_fixed; ++g) {
      if (!(pattern_apply(*group, g, P) == P)) is_fixed = false;
    }
    if (is_fixed) fixed.push_back(P);
  }
  return fixed;
}

CoincidencePattern coincidence_pattern(const RationalTuple& phi) {
  const int q = phi.group->order();
  std::map<std::vector<Rational>, int> labels;
  std::vector<int> assignment(q);
  for (int g = 0; g < q; ++g) {
    std::vector<Rational> v(phi.values.begin() + static_cast<std::size_t>(g) * phi.dim,
                            phi.values.begin() + static_cast<std::size_t>(g + 1) * phi.dim);
    auto [it, inserted] = labels.emplace(std::move(v), static_cast<int>(labels.size()));
    assignment[g] = it->second;
  }
  return pattern_from_assignment(assignment);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CoincidencePattern coincidence_pattern(const FloatTuple& phi, const ClusterOptions& opts) {
  const int q = phi.group->order();
  const double eps = opts.cluster_eps;
  const double hi = opts.ambiguity_hi < 0 ? 10.0 * eps : opts.ambiguity_hi;
  if (eps < 0) throw InvalidInputError("cluster tolerance must be >= 0");

  const auto dist_inf = [&](int a, int b) {
    double d = 0;
    for (int c = 0; c < phi.dim; ++c) d = std::max(d, std::abs(phi.at(a, c) - phi.at(b, c)));
    return d;
  };

  UnionFind uf(q);
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      if (dist_inf(a, b) <= eps) uf.unite(a, b);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      if (uf.find(a) == uf.find(b)) continue;
      const double d = dist_inf(a, b);
      if (d > eps && d < hi) {
        char msg[128];
        std::snprintf(msg, sizeof(msg),
                      "cross-cluster distance %.3e lies in the ambiguity band (%.3e, %.3e)", d,
                      eps, hi);
        throw AmbiguousPatternError(msg);
      }
    }
  }
  std::vector<int> assignment(q);
  for (int g = 0; g < q; ++g) assignment[g] = uf.find(g);
  return pattern_from_assignment(assignment);
}

}  // namespace coincider
