#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coincider/group.hpp"
#include "coincider/mapspec.hpp"
#include "coincider/orbit_tuple.hpp"
#include "coincider/ratmat.hpp"

namespace coincider {

enum class ActionKind { Antipodal, IGPermutation, ComplexRoots, User };

std::string action_kind_name(ActionKind kind);

/// An orthogonal representation of a finite group on R^d: one d x d matrix
/// per element, with an exact rational source kept alongside when one exists.
struct ActionRep {
  GroupPtr group;
  int d = 0;
  ActionKind kind = ActionKind::User;
  std::vector<std::vector<double>> mats;  // element index -> row-major d x d
  std::vector<RatMat> exact_mats;         // empty when no exact source exists

  bool has_exact() const { return !exact_mats.empty(); }

  /// Checks R(e) = I, the homomorphism property
  /// max_entry |R(g)R(h) - R(gh)| <= 1e-12 for all pairs, and orthogonality
  /// max_entry |R(g)^T R(g) - I| <= 1e-12; exact matrices, when present,
  /// must satisfy all three exactly and match the float matrices to 1e-12.
  void validate() const;

  std::vector<double> apply(int g, const std::vector<double>& x) const;
  std::vector<Rational> apply(int g, const std::vector<Rational>& x) const;

  /// True when no g != e fixes a point of the unit sphere, i.e.
  /// det(R(g) - I) != 0 for every non-identity g.  Uses the exact matrices
  /// when available, otherwise a pivoted elimination on the float ones.
  bool is_free_on_sphere() const;
};

/// Z_2 acting by x -> -x on R^d.  Exact.
ActionRep make_antipodal(const GroupPtr& group, int d);

/// The left regular permutation action on R^G: e_h -> e_{gh}.  Exact.
ActionRep make_regular_permutation(const GroupPtr& group);

/// The permutation action restricted to the sum-zero subspace I[G],
/// written in an orthonormal basis of that subspace, so d = |G| - 1.
/// Orthogonal but not exactly rational.
ActionRep make_ig_permutation(const GroupPtr& group);

/// Z_q acting on R^d (d even) by simultaneous rotation of each coordinate
/// pair through 2*pi*j/q; free on the sphere for every q >= 2.
ActionRep make_complex_roots(const GroupPtr& group, int d);

/// User-supplied matrices; validated on construction.
ActionRep make_user(const GroupPtr& group, int d,
                    std::vector<std::vector<double>> mats,
                    std::vector<RatMat> exact_mats = {});

/// The tuple g -> f(g^{-1} x); satisfies h . hat(x) = hat(h x).
FloatTuple hat_map(const MapSpec& f, const ActionRep& action,
                   const std::vector<double>& x);

/// Exact variant; requires exact action matrices and an exactly evaluable f.
RationalTuple hat_map(const MapSpec& f, const ActionRep& action,
                      const std::vector<Rational>& x);

}  // namespace coincider
