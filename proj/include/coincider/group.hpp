#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coincider/rational.hpp"

namespace coincider {

/// A finite group as an explicit multiplication table.
///
/// Elements are dense indices 0..q-1 with the identity at index 0. Tables are
/// immutable after construction and safe to share across threads.
class GroupTable {
 public:
  GroupTable(int order, std::vector<std::uint16_t> mult, std::string label);

  int order() const { return q_; }
  int identity() const { return 0; }
  const std::string& label() const { return label_; }

  int mult(int g, int h) const { return mult_[static_cast<std::size_t>(g) * q_ + h]; }
  int inverse(int g) const { return inverses_[g]; }

  /// Order of the cyclic subgroup generated by g.
  int element_order(int g) const;

  /// Exhaustively checks the group axioms (associativity only for q <= 64).
  /// Throws InvalidInputError with a description of the first violation.
  void validate() const;

 private:
  int q_;
  std::vector<std::uint16_t> mult_;
  std::vector<std::uint16_t> inverses_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Z/q with mult[i][j] = (i+j) mod q.
GroupPtr make_cyclic(int q);

/// Elementary abelian group (Z/p)^n of order p^n, componentwise addition
/// mod p. Requires p prime and p^n <= 4096.
GroupPtr make_p_torus(int p, int n);

bool is_prime(int p);

/// A subset of group elements, stored as a bitmask (requires q <= 64).
struct GroupSubset {
  GroupPtr group;
  std::uint64_t mask = 0;

  GroupSubset() = default;
  GroupSubset(GroupPtr g, std::uint64_t m);
  GroupSubset(GroupPtr g, const std::vector<int>& members);

  int size() const;
  bool contains(int g) const { return (mask >> g) & 1u; }
  std::vector<int> members() const;
  GroupSubset complement() const;

  bool operator==(const GroupSubset& other) const { return mask == other.mask; }
};

/// gM = {g*m : m in M}.
GroupSubset act_on_subset(int g, const GroupSubset& M);

/// True iff gM = M for every g in the group.
bool subset_is_group_fixed(const GroupSubset& M);

/// All m-element subsets of the group, as masks.
std::vector<std::uint64_t> enumerate_subsets(int q, int m);

/// A vector in the group ring with coefficients summing to zero exactly.
struct IGVector {
  std::vector<Rational> coefficients;

  Rational sum() const;
};

/// Orthogonal projection of a coefficient vector onto the sum-zero subspace:
/// subtracts the mean from every coefficient. Exact and idempotent.
IGVector project_to_ig(const std::vector<Rational>& v);

}  // namespace coincider
