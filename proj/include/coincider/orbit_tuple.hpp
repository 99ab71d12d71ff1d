#pragma once

#include <vector>

#include "coincider/errors.hpp"
#include "coincider/group.hpp"
#include "coincider/rational.hpp"

namespace coincider {

/// A point of Y^q indexed by group elements, Y = R^m. values is stored
/// row-major: value(g)[c] = values[g*m + c].
template <typename Scalar>
struct OrbitTuple {
  GroupPtr group;
  int dim = 1;
  std::vector<Scalar> values;

  OrbitTuple() = default;
  OrbitTuple(GroupPtr g, int m, std::vector<Scalar> vals)
      : group(std::move(g)), dim(m), values(std::move(vals)) {
    if (!group) throw InvalidInputError("orbit tuple requires a group");
    if (dim < 1) throw InvalidInputError("orbit tuple dimension must be >= 1");
    if (values.size() != static_cast<std::size_t>(group->order()) * dim) {
      throw InvalidInputError("orbit tuple needs exactly q*m values");
    }
  }

  const Scalar& at(int g, int c = 0) const {
    return values[static_cast<std::size_t>(g) * dim + c];
  }
  Scalar& at(int g, int c = 0) { return values[static_cast<std::size_t>(g) * dim + c]; }
};

using RationalTuple = OrbitTuple<Rational>;
using FloatTuple = OrbitTuple<double>;

/// (g.phi)(h) = phi(g^{-1} h). Exact for rational scalars.
template <typename Scalar>
OrbitTuple<Scalar> act_on_tuple(int g, const OrbitTuple<Scalar>& phi) {
  const int q = phi.group->order();
  if (g < 0 || g >= q) throw InvalidInputError("group element out of range");
  const int ginv = phi.group->inverse(g);
  OrbitTuple<Scalar> out = phi;
  for (int h = 0; h < q; ++h) {
    const int src = phi.group->mult(ginv, h);
    for (int c = 0; c < phi.dim; ++c) out.at(h, c) = phi.at(src, c);
  }
  return out;
}

}  // namespace coincider
