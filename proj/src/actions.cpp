#include "coincider/actions.hpp"

#include <cmath>
#include <cstdlib>

#include "coincider/errors.hpp"

namespace coincider {

namespace {

constexpr double kActionTol = 1e-12;

std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, int d) {
  std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int l = 0; l < d; ++l) {
      const double v = a[static_cast<std::size_t>(i) * d + l];
      if (v == 0) continue;
      for (int j = 0; j < d; ++j) {
        out[static_cast<std::size_t>(i) * d + j] += v * b[static_cast<std::size_t>(l) * d + j];
      }
    }
  }
  return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> identity_matrix(int d) {
  std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i) * d + i] = 1.0;
  return out;
}

std::vector<double> transpose(const std::vector<double>& a, int d) {
  std::vector<double> out(a.size());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out[static_cast<std::size_t>(j) * d + i] = a[static_cast<std::size_t>(i) * d + j];
    }
  }
  return out;
}

RatMat rat_matmul(const RatMat& a, const RatMat& b) {
  RatMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int l = 0; l < a.cols; ++l) {
      const Rational& v = a.at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(l, j);
    }
  }
  return out;
}

bool rat_is_identity(const RatMat& a) {
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      if (a.at(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

/// |det| of a copy of a row-major d x d matrix, by partial-pivot elimination.
double abs_det(std::vector<double> a, int d) {
  double det = 1.0;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r) {
      if (std::abs(a[static_cast<std::size_t>(r) * d + col]) >
          std::abs(a[static_cast<std::size_t>(pivot) * d + col])) {
        pivot = r;
      }
    }
    const double pv = a[static_cast<std::size_t>(pivot) * d + col];
    if (pv == 0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(a[static_cast<std::size_t>(pivot) * d + j],
                  a[static_cast<std::size_t>(col) * d + j]);
      }
    }
    det *= pv;
    for (int r = col + 1; r < d; ++r) {
      const double f = a[static_cast<std::size_t>(r) * d + col] / pv;
      if (f == 0) continue;
      for (int j = col; j < d; ++j) {
        a[static_cast<std::size_t>(r) * d + j] -= f * a[static_cast<std::size_t>(col) * d + j];
      }
    }
  }
  return std::abs(det);
}

}  // namespace

std::string action_kind_name(ActionKind kind) {
  switch (kind) {
    case ActionKind::Antipodal: return "antipodal";
    case ActionKind::IGPermutation: return "coordinate-permutation-on-I[G]";
    case ActionKind::ComplexRoots: return "complex-roots-of-unity";
    case ActionKind::User: return "user-supplied";
  }
  return "user-supplied";
}

void ActionRep::validate() const {
  if (!group) throw InvalidInputError("action has no group");
  if (d < 1) throw InvalidInputError("action dimension must be >= 1");
  const int q = group->order();
  if (static_cast<int>(mats.size()) != q) {
    throw InvalidInputError("action needs one matrix per group element");
  }
  const std::size_t dd = static_cast<std::size_t>(d) * d;
  for (const auto& m : mats) {
    if (m.size() != dd) throw InvalidInputError("action matrix has wrong shape");
  }
  const std::vector<double> eye = identity_matrix(d);
  if (max_abs_diff(mats[group->identity()], eye) > kActionTol) {
    throw InvalidInputError("action does not map the identity to the identity matrix");
  }
  for (int g = 0; g < q; ++g) {
    if (max_abs_diff(matmul(transpose(mats[g], d), mats[g], d), eye) > kActionTol) {
      throw InvalidInputError("action matrix is not orthogonal");
    }
    for (int h = 0; h < q; ++h) {
      if (max_abs_diff(matmul(mats[g], mats[h], d), mats[group->mult(g, h)]) > kActionTol) {
        throw InvalidInputError("action matrices do not respect the group multiplication");
      }
    }
  }
  if (!exact_mats.empty()) {
    if (static_cast<int>(exact_mats.size()) != q) {
      throw InvalidInputError("exact action matrices must cover every element");
    }
    for (int g = 0; g < q; ++g) {
      const RatMat& m = exact_mats[g];
      if (m.rows != d || m.cols != d) {
        throw InvalidInputError("exact action matrix has wrong shape");
      }
      RatMat mt(d, d);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) mt.at(j, i) = m.at(i, j);
      }
      if (!rat_is_identity(rat_matmul(mt, m))) {
        throw InvalidInputError("exact action matrix is not orthogonal");
      }
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const double approx = static_cast<double>(m.at(i, j));
          if (std::abs(approx - mats[g][static_cast<std::size_t>(i) * d + j]) > kActionTol) {
            throw InvalidInputError("exact and float action matrices disagree");
          }
        }
      }
    }
    if (!rat_is_identity(exact_mats[group->identity()])) {
      throw InvalidInputError("exact action does not map the identity to the identity matrix");
    }
    for (int g = 0; g < q; ++g) {
      for (int h = 0; h < q; ++h) {
        const RatMat prod = rat_matmul(exact_mats[g], exact_mats[h]);
        const RatMat& expect = exact_mats[group->mult(g, h)];
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) {
            if (prod.at(i, j) != expect.at(i, j)) {
              throw InvalidInputError("exact action matrices do not respect the multiplication");
            }
          }
        }
      }
    }
  }
}

std::vector<double> ActionRep::apply(int g, const std::vector<double>& x) const {
  if (g < 0 || g >= group->order()) throw InvalidInputError("group element out of range");
  if (static_cast<int>(x.size()) != d) throw InvalidInputError("point dimension mismatch");
  std::vector<double> out(d, 0.0);
  const auto& m = mats[g];
  for (int i = 0; i < d; ++i) {
    double acc = 0;
    for (int j = 0; j < d; ++j) acc += m[static_cast<std::size_t>(i) * d + j] * x[j];
    out[i] = acc;
  }
  return out;
}

std::vector<Rational> ActionRep::apply(int g, const std::vector<Rational>& x) const {
  if (g < 0 || g >= group->order()) throw InvalidInputError("group element out of range");
  if (static_cast<int>(x.size()) != d) throw InvalidInputError("point dimension mismatch");
  if (!has_exact()) throw NonRationalError("action has no exact rational matrices");
  std::vector<Rational> out(d, Rational(0));
  const RatMat& m = exact_mats[g];
  for (int i = 0; i < d; ++i) {
    Rational acc = 0;
    for (int j = 0; j < d; ++j) acc += m.at(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

bool ActionRep::is_free_on_sphere() const {
  const int q = group->order();
  for (int g = 0; g < q; ++g) {
    if (g == group->identity()) continue;
    if (has_exact()) {
      RatMat m = exact_mats[g];
      for (int i = 0; i < d; ++i) m.at(i, i) -= 1;
      if (rank(m) < d) return false;
    } else {
      std::vector<double> m = mats[g];
      for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) * d + i] -= 1.0;
      if (abs_det(std::move(m), d) <= 1e-9) return false;
    }
  }
  return true;
}

ActionRep make_antipodal(const GroupPtr& group, int d) {
  if (!group || group->order() != 2) {
    throw InvalidInputError("the antipodal action needs a group of order 2");
  }
  ActionRep rep;
  rep.group = group;
  rep.d = d;
  rep.kind = ActionKind::Antipodal;
  rep.mats = {identity_matrix(d), std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
  RatMat eye(d, d);
  RatMat neg(d, d);
  for (int i = 0; i < d; ++i) {
    rep.mats[1][static_cast<std::size_t>(i) * d + i] = -1.0;
    eye.at(i, i) = 1;
    neg.at(i, i) = -1;
  }
  rep.exact_mats = {eye, neg};
  rep.validate();
  return rep;
}

ActionRep make_regular_permutation(const GroupPtr& group) {
  if (!group) throw InvalidInputError("regular permutation action needs a group");
  const int q = group->order();
  ActionRep rep;
  rep.group = group;
  rep.d = q;
  rep.kind = ActionKind::User;
  rep.mats.assign(q, std::vector<double>(static_cast<std::size_t>(q) * q, 0.0));
  rep.exact_mats.assign(q, RatMat(q, q));
  for (int g = 0; g < q; ++g) {
    for (int h = 0; h < q; ++h) {
      const int target = group->mult(g, h);  // e_h -> e_{gh}
      rep.mats[g][static_cast<std::size_t>(target) * q + h] = 1.0;
      rep.exact_mats[g].at(target, h) = 1;
    }
  }
  rep.validate();
  return rep;
}

ActionRep make_ig_permutation(const GroupPtr& group) {
  if (!group || group->order() < 2) {
    throw InvalidInputError("the I[G] permutation action needs |G| >= 2");
  }
  const int q = group->order();
  const int d = q - 1;
  // Orthonormal basis of the sum-zero subspace of R^G: column j (1-based)
  // has j entries 1/sqrt(j(j+1)) followed by -j/sqrt(j(j+1)).
  std::vector<std::vector<double>> basis(d, std::vector<double>(q, 0.0));
  for (int j = 1; j <= d; ++j) {
    const double s = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
    for (int i = 0; i < j; ++i) basis[j - 1][i] = s;
    basis[j - 1][j] = -j * s;
  }
  ActionRep rep;
  rep.group = group;
  rep.d = d;
  rep.kind = ActionKind::IGPermutation;
  rep.mats.assign(q, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0));
  for (int g = 0; g < q; ++g) {
    const int ginv = group->inverse(g);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        // (B^T P(g) B)_{rc} with (P(g) b)_i = b_{g^{-1} i}.
        double acc = 0;
        for (int i = 0; i < q; ++i) acc += basis[r][i] * basis[c][group->mult(ginv, i)];
        rep.mats[g][static_cast<std::size_t>(r) * d + c] = acc;
      }
    }
  }
  rep.validate();
  return rep;
}

ActionRep make_complex_roots(const GroupPtr& group, int d) {
  if (!group) throw InvalidInputError("complex roots action needs a group");
  const int q = group->order();
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (group->mult(a, b) != (a + b) % q) {
        throw InvalidInputError("complex roots action needs the standard cyclic group");
      }
    }
  }
  if (d < 2 || d % 2 != 0) {
    throw InvalidInputError("complex roots action needs an even dimension >= 2");
  }
  ActionRep rep;
  rep.group = group;
  rep.d = d;
  rep.kind = ActionKind::ComplexRoots;
  rep.mats.assign(q, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0));
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (int j = 0; j < q; ++j) {
    const double c = std::cos(kTwoPi * j / q);
    const double s = std::sin(kTwoPi * j / q);
    for (int b = 0; b < d / 2; ++b) {
      auto& m = rep.mats[j];
      m[static_cast<std::size_t>(2 * b) * d + 2 * b] = c;
      m[static_cast<std::size_t>(2 * b) * d + 2 * b + 1] = -s;
      m[static_cast<std::size_t>(2 * b + 1) * d + 2 * b] = s;
      m[static_cast<std::size_t>(2 * b + 1) * d + 2 * b + 1] = c;
    }
  }
  rep.validate();
  return rep;
}

ActionRep make_user(const GroupPtr& group, int d, std::vector<std::vector<double>> mats,
                    std::vector<RatMat> exact_mats) {
  ActionRep rep;
  rep.group = group;
  rep.d = d;
  rep.kind = ActionKind::User;
  rep.mats = std::move(mats);
  rep.exact_mats = std::move(exact_mats);
  rep.validate();
  return rep;
}

FloatTuple hat_map(const MapSpec& f, const ActionRep& action, const std::vector<double>& x) {
  if (f.d != action.d) throw InvalidInputError("map and action dimensions disagree");
  const int q = action.group->order();
  const int m = f.m();
  std::vector<double> values(static_cast<std::size_t>(q) * m);
  for (int g = 0; g < q; ++g) {
    const std::vector<double> out = f.eval(action.apply(action.group->inverse(g), x));
    for (int c = 0; c < m; ++c) values[static_cast<std::size_t>(g) * m + c] = out[c];
  }
  return FloatTuple(action.group, m, std::move(values));
}

RationalTuple hat_map(const MapSpec& f, const ActionRep& action,
                      const std::vector<Rational>& x) {
  if (f.d != action.d) throw InvalidInputError("map and action dimensions disagree");
  if (!action.has_exact()) throw NonRationalError("action has no exact rational matrices");
  if (!f.rational_evaluable()) throw NonRationalError("map is not exactly evaluable");
  const int q = action.group->order();
  const int m = f.m();
  std::vector<Rational> values(static_cast<std::size_t>(q) * m);
  for (int g = 0; g < q; ++g) {
    const std::vector<Rational> out = f.eval(action.apply(action.group->inverse(g), x));
    for (int c = 0; c < m; ++c) values[static_cast<std::size_t>(g) * m + c] = out[c];
  }
  return RationalTuple(action.group, m, std::move(values));
}

}  // namespace coincider
