#include "coincider/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "coincider/errors.hpp"

namespace coincider {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> matvec(const std::vector<double>& m, const std::vector<double>& x, int n) {
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    for (int j = 0; j < n; ++j) acc += m[static_cast<std::size_t>(i) * n + j] * x[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      const double v = a[static_cast<std::size_t>(i) * n + l];
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(i) * n + j] += v * b[static_cast<std::size_t>(l) * n + j];
      }
    }
  }
  return out;
}

/// C(q, k) when it is <= limit; returns false (count unset) otherwise.
bool binomial_at_most(int q, int k, long long limit, long long* count) {
  if (k < 0 || k > q) {
    *count = 0;
    return true;
  }
  long long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (q - k + i) / i;  // partial products of C are integers in this order
    if (c > limit) return false;
  }
  *count = c;
  return true;
}

/// All orbit values f(g x), one m-vector per group element.
std::vector<std::vector<double>> orbit_values(const std::vector<double>& x, const Scenario& s) {
  const int q = s.group->order();
  std::vector<std::vector<double>> out;
  out.reserve(q);
  for (int g = 0; g < q; ++g) out.push_back(s.map.eval(s.action.apply(g, x)));
  return out;
}

double pair_d2(const std::vector<double>& a, const std::vector<double>& b, int lo, int hi) {
  double acc = 0;
  for (int c = lo; c < hi; ++c) {
    const double diff = a[c] - b[c];
    acc += diff * diff;
  }
  return acc;
}

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

SubsetResidual residual_A(const std::vector<double>& x, const Scenario& s) {
  const int q = s.group->order();
  const int k = s.k;
  const auto values = orbit_values(x, s);
  const int m = s.map.m();
  SubsetResidual out;

  if (k == q) {
    out.subset.resize(q);
    for (int g = 0; g < q; ++g) out.subset[g] = g;
    for (int g = 0; g < q; ++g) {
      for (int h = g + 1; h < q; ++h) out.value += pair_d2(values[g], values[h], 0, m);
    }
    return out;
  }

  long long count = 0;
  if (q <= 64 && binomial_at_most(q, k, 100000, &count)) {
    std::vector<double> d2(static_cast<std::size_t>(q) * q, 0.0);
    for (int g = 0; g < q; ++g) {
      for (int h = g + 1; h < q; ++h) {
        d2[static_cast<std::size_t>(g) * q + h] = pair_d2(values[g], values[h], 0, m);
      }
    }
    double best = std::numeric_limits<double>::infinity();
    std::uint64_t best_mask = 0;
    for (const std::uint64_t mask : enumerate_subsets(q, k)) {
      const std::vector<int> members = mask_members(mask);
      double total = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          total += d2[static_cast<std::size_t>(members[i]) * q + members[j]];
        }
      }
      if (total < best) {
        best = total;
        best_mask = mask;
      }
    }
    out.value = best;
    out.subset = mask_members(best_mask);
    return out;
  }

  // Greedy fallback: grow the subset from every seed, keeping the cheapest.
  out.exact_enumeration = false;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_subset;
  for (int seed_g = 0; seed_g < q; ++seed_g) {
    std::vector<int> subset = {seed_g};
    std::vector<char> used(q, 0);
    used[seed_g] = 1;
    double total = 0;
    while (static_cast<int>(subset.size()) < k) {
      int best_h = -1;
      double best_add = std::numeric_limits<double>::infinity();
      for (int h = 0; h < q; ++h) {
        if (used[h]) continue;
        double add = 0;
        for (const int g : subset) add += pair_d2(values[g], values[h], 0, m);
        if (add < best_add) {
          best_add = add;
          best_h = h;
        }
      }
      used[best_h] = 1;
      subset.push_back(best_h);
      total += best_add;
    }
    if (total < best) {
      best = total;
      std::sort(subset.begin(), subset.end());
      best_subset = subset;
    }
  }
  out.value = best;
  out.subset = best_subset;
  return out;
}

SubsetResidualExact residual_A_exact(const std::vector<Rational>& x, const MapSpec& f,
                                     const ActionRep& action, int k) {
  const int q = action.group->order();
  if (k < 2 || k > q) throw InvalidInputError("need 2 <= k <= |G|");
  long long count = 0;
  if (q > 64 || !binomial_at_most(q, k, 1000000, &count)) {
    throw InvalidInputError("exact residual needs an enumerable subset count");
  }
  const int m = f.m();
  std::vector<std::vector<Rational>> values;
  values.reserve(q);
  for (int g = 0; g < q; ++g) values.push_back(f.eval(action.apply(g, x)));

  std::vector<Rational> d2(static_cast<std::size_t>(q) * q, Rational(0));
  for (int g = 0; g < q; ++g) {
    for (int h = g + 1; h < q; ++h) {
      Rational acc = 0;
      for (int c = 0; c < m; ++c) {
        const Rational diff = values[g][c] - values[h][c];
        acc += diff * diff;
      }
      d2[static_cast<std::size_t>(g) * q + h] = acc;
    }
  }
  bool have = false;
  Rational best;
  std::uint64_t best_mask = 0;
  for (const std::uint64_t mask : enumerate_subsets(q, k)) {
    const std::vector<int> members = mask_members(mask);
    Rational total = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        total += d2[static_cast<std::size_t>(members[i]) * q + members[j]];
      }
    }
    if (!have || total < best) {
      have = true;
      best = total;
      best_mask = mask;
    }
  }
  SubsetResidualExact out;
  out.value = best;
  out.subset = mask_members(best_mask);
  return out;
}

namespace {

/// Scalar orbit values of component 0, plus the descending index order.
void scalar_orbit(const std::vector<double>& x, const Scenario& s, std::vector<double>* vals,
                  std::vector<int>* order) {
  const int q = s.group->order();
  vals->resize(q);
  for (int g = 0; g < q; ++g) (*vals)[g] = s.map.eval(s.action.apply(g, x))[0];
  order->resize(q);
  for (int g = 0; g < q; ++g) (*order)[g] = g;
  std::sort(order->begin(), order->end(), [&](int a, int b) {
    if ((*vals)[a] != (*vals)[b]) return (*vals)[a] > (*vals)[b];
    return a < b;
  });
}

}  // namespace

double residual_Aprime(const std::vector<double>& x, const Scenario& s, std::vector<int>* subset,
                       double* common) {
  std::vector<double> vals;
  std::vector<int> order;
  scalar_orbit(x, s, &vals, &order);
  const double v1 = vals[order[0]];
  const double vk = vals[order[s.k - 1]];
  if (subset) {
    subset->assign(order.begin(), order.begin() + s.k);
    std::sort(subset->begin(), subset->end());
  }
  if (common) *common = v1;
  const double diff = v1 - vk;
  return diff * diff;
}

namespace {

/// A' residual on component 0 plus full q-fold coincidence of the rest.
double residual_combined(const std::vector<double>& x, const Scenario& s,
                         std::vector<int>* subset, std::vector<double>* common) {
  double c1 = 0;
  double res = residual_Aprime(x, s, subset, &c1);
  const int q = s.group->order();
  const int m = s.map.m();
  const auto values = orbit_values(x, s);
  for (int g = 0; g < q; ++g) {
    for (int h = g + 1; h < q; ++h) res += pair_d2(values[g], values[h], 1, m);
  }
  if (common) {
    common->assign(1, c1);
    for (int c = 1; c < m; ++c) {
      double mean = 0;
      for (int g = 0; g < q; ++g) mean += values[g][c];
      common->push_back(mean / q);
    }
  }
  return res;
}

}  // namespace

double residual_knaster(const std::vector<double>& rho, const Scenario& s, double* common) {
  const int q = s.group->order();
  const int n = s.d;
  std::vector<double> w(q);
  for (int g = 0; g < q; ++g) {
    const std::vector<double> y = s.action.apply(g, s.base_point);
    w[g] = s.map.eval(matvec(rho, y, n))[0];
  }
  const int e = s.group->identity();
  double mean = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (int g = 0; g < q; ++g) {
    if (g == e) continue;
    mean += w[g];
    lowest = std::min(lowest, w[g]);
  }
  mean /= (q - 1);
  double res = 0;
  for (int g = 0; g < q; ++g) {
    if (g == e) continue;
    const double diff = w[g] - mean;
    res += diff * diff;
  }
  const double hinge = std::max(0.0, w[e] - lowest);
  res += hinge * hinge;
  if (common) *common = mean;
  return res;
}

double scenario_residual(const std::vector<double>& point, const Scenario& s) {
  switch (s.target) {
    case Target::A: return residual_A(point, s).value;
    case Target::APrime: return residual_Aprime(point, s);
    case Target::APrimeAndA: return residual_combined(point, s, nullptr, nullptr);
    case Target::Knaster: return residual_knaster(point, s);
  }
  throw InvalidInputError("unknown target");
}

namespace {

// ---- manifold charts and retractions ----

std::vector<std::vector<double>> tangent_basis(const std::vector<double>& p) {
  const int d = static_cast<int>(p.size());
  std::vector<std::vector<double>> basis;
  for (int i = 0; i < d && static_cast<int>(basis.size()) < d - 1; ++i) {
    std::vector<double> v(d, 0.0);
    v[i] = 1.0;
    const double pi = p[i];
    for (int j = 0; j < d; ++j) v[j] -= pi * p[j];
    for (const auto& b : basis) {
      const double c = dot(v, b);
      for (int j = 0; j < d; ++j) v[j] -= c * b[j];
    }
    const double n = norm(v);
    if (n > 1e-8) {
      for (double& entry : v) entry /= n;
      basis.push_back(std::move(v));
    }
  }
  if (static_cast<int>(basis.size()) != d - 1) {
    throw AssertionFailureError("tangent basis construction failed");
  }
  return basis;
}

std::vector<double> retract_sphere(const std::vector<double>& p,
                                   const std::vector<std::vector<double>>& basis,
                                   const std::vector<double>& t) {
  std::vector<double> y = p;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += t[j] * basis[j][i];
  }
  const double n = norm(y);  // = sqrt(1 + |t|^2), never zero
  for (double& v : y) v /= n;
  return y;
}

std::vector<double> skew_from(const std::vector<double>& t, int n) {
  std::vector<double> k(static_cast<std::size_t>(n) * n, 0.0);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      k[static_cast<std::size_t>(i) * n + j] = t[idx];
      k[static_cast<std::size_t>(j) * n + i] = -t[idx];
      ++idx;
    }
  }
  return k;
}

std::vector<double> expm(std::vector<double> a, int n) {
  double amax = 0;
  for (const double v : a) amax = std::max(amax, std::abs(v));
  int squarings = 0;
  while (amax > 0.25) {
    amax /= 2;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (double& v : a) v *= scale;

  std::vector<double> x(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> term = x;
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i) * n + i] = 1.0;
    term[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  for (int j = 1; j <= 16; ++j) {
    term = matmul(term, a, n);
    for (double& v : term) v /= j;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += term[i];
  }
  for (int i = 0; i < squarings; ++i) x = matmul(x, x, n);
  return x;
}

/// Modified Gram-Schmidt on the rows; keeps a near-orthogonal matrix exactly
/// orthogonal so retraction drift cannot accumulate.
void orthonormalize_rows(std::vector<double>* m, int n) {
  for (int i = 0; i < n; ++i) {
    double* row = m->data() + static_cast<std::size_t>(i) * n;
    for (int prev = 0; prev < i; ++prev) {
      const double* p = m->data() + static_cast<std::size_t>(prev) * n;
      double c = 0;
      for (int j = 0; j < n; ++j) c += row[j] * p[j];
      for (int j = 0; j < n; ++j) row[j] -= c * p[j];
    }
    double nn = 0;
    for (int j = 0; j < n; ++j) nn += row[j] * row[j];
    nn = std::sqrt(nn);
    if (nn < 1e-12) throw AssertionFailureError("degenerate rotation matrix");
    for (int j = 0; j < n; ++j) row[j] /= nn;
  }
}

std::vector<double> retract_rotation(const std::vector<double>& p, const std::vector<double>& t,
                                     int n) {
  std::vector<double> out = matmul(p, expm(skew_from(t, n), n), n);
  orthonormalize_rows(&out, n);
  return out;
}

double signed_det(std::vector<double> a, int n) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[static_cast<std::size_t>(r) * n + col]) >
          std::abs(a[static_cast<std::size_t>(pivot) * n + col])) {
        pivot = r;
      }
    }
    const double pv = a[static_cast<std::size_t>(pivot) * n + col];
    if (pv == 0) return 0.0;
    if (pivot != col) {
      det = -det;
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
      }
    }
    det *= pv;
    for (int r = col + 1; r < n; ++r) {
      const double f = a[static_cast<std::size_t>(r) * n + col] / pv;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) {
        a[static_cast<std::size_t>(r) * n + j] -= f * a[static_cast<std::size_t>(col) * n + j];
      }
    }
  }
  return det;
}

// ---- deterministic random starts ----

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // in (0, 1]
}

double gaussian(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

std::vector<double> random_sphere_point(std::mt19937_64& rng, int d) {
  while (true) {
    std::vector<double> p(d);
    for (double& v : p) v = gaussian(rng);
    const double n = norm(p);
    if (n > 1e-6) {
      for (double& v : p) v /= n;
      return p;
    }
  }
}

std::vector<double> random_rotation(std::mt19937_64& rng, int n) {
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (double& v : m) v = gaussian(rng);
  orthonormalize_rows(&m, n);
  if (signed_det(m, n) < 0) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(n - 1) * n + j] *= -1;
  }
  return m;
}

// ---- derivative-free simplex descent ----

struct NmResult {
  std::vector<double> t;
  double f = std::numeric_limits<double>::infinity();
};

NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective, int dim,
                     int max_iters) {
  const int n_pts = dim + 1;
  std::vector<std::vector<double>> pts(n_pts, std::vector<double>(dim, 0.0));
  std::vector<double> fv(n_pts);
  for (int i = 1; i < n_pts; ++i) pts[i][i - 1] = 0.5;
  for (int i = 0; i < n_pts; ++i) fv[i] = objective(pts[i]);

  std::vector<int> order(n_pts);
  for (int iter = 0; iter < max_iters; ++iter) {
    for (int i = 0; i < n_pts; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (fv[a] != fv[b]) return fv[a] < fv[b];
      return a < b;
    });
    const int best = order[0];
    const int worst = order[n_pts - 1];
    const int second = order[n_pts - 2];
    if (fv[best] < 1e-22) break;
    if (fv[worst] - fv[best] < 1e-17 * (1.0 + std::abs(fv[best]))) break;

    std::vector<double> centroid(dim, 0.0);
    for (int i = 0; i < n_pts; ++i) {
      if (i == worst) continue;
      for (int j = 0; j < dim; ++j) centroid[j] += pts[i][j];
    }
    for (double& v : centroid) v /= dim;

    std::vector<double> xr(dim);
    for (int j = 0; j < dim; ++j) xr[j] = 2 * centroid[j] - pts[worst][j];
    const double fr = objective(xr);

    if (fr < fv[best]) {
      std::vector<double> xe(dim);
      for (int j = 0; j < dim; ++j) xe[j] = 3 * centroid[j] - 2 * pts[worst][j];
      const double fe = objective(xe);
      if (fe < fr) {
        pts[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = std::move(xr);
      fv[worst] = fr;
      continue;
    }
    std::vector<double> xc(dim);
    if (fr < fv[worst]) {
      for (int j = 0; j < dim; ++j) xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
    } else {
      for (int j = 0; j < dim; ++j) xc[j] = centroid[j] + 0.5 * (pts[worst][j] - centroid[j]);
    }
    const double fc = objective(xc);
    if (fc < std::min(fr, fv[worst])) {
      pts[worst] = std::move(xc);
      fv[worst] = fc;
      continue;
    }
    for (int i = 0; i < n_pts; ++i) {  // shrink toward the best vertex
      if (i == best) continue;
      for (int j = 0; j < dim; ++j) pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
      fv[i] = objective(pts[i]);
    }
  }
  int best = 0;
  for (int i = 1; i < n_pts; ++i) {
    if (fv[i] < fv[best]) best = i;
  }
  return {pts[best], fv[best]};
}

struct StartOutcome {
  double residual = std::numeric_limits<double>::infinity();
  std::vector<double> point;
};

StartOutcome run_start(const Scenario& s, int start) {
  std::mt19937_64 rng(s.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(start + 1));
  const bool sphere = s.domain == DomainKind::Sphere;
  const int dim = sphere ? s.d - 1 : s.d * (s.d - 1) / 2;

  std::vector<double> p =
      sphere ? random_sphere_point(rng, s.d) : random_rotation(rng, s.d);
  if (dim == 0) return {scenario_residual(p, s), p};

  double current = scenario_residual(p, s);
  for (int round = 0; round < 3; ++round) {
    NmResult nm;
    if (sphere) {
      const auto basis = tangent_basis(p);
      nm = nelder_mead(
          [&](const std::vector<double>& t) {
            return scenario_residual(retract_sphere(p, basis, t), s);
          },
          dim, s.max_iters);
      p = retract_sphere(p, basis, nm.t);
    } else {
      nm = nelder_mead(
          [&](const std::vector<double>& t) {
            return scenario_residual(retract_rotation(p, t, s.d), s);
          },
          dim, s.max_iters);
      p = retract_rotation(p, nm.t, s.d);
    }
    current = nm.f;
    if (current < 1e-20) break;
  }
  return {scenario_residual(p, s), p};
}

void fill_target_details(const Scenario& s, SolverResult* r) {
  switch (s.target) {
    case Target::A: {
      const SubsetResidual sr = residual_A(r->witness, s);
      r->witness_subset = sr.subset;
      r->greedy_warning = !sr.exact_enumeration;
      const auto values = orbit_values(r->witness, s);
      r->common_value.assign(s.map.m(), 0.0);
      for (const int g : sr.subset) {
        for (int c = 0; c < s.map.m(); ++c) r->common_value[c] += values[g][c];
      }
      for (double& v : r->common_value) v /= static_cast<double>(sr.subset.size());
      break;
    }
    case Target::APrime: {
      double c = 0;
      residual_Aprime(r->witness, s, &r->witness_subset, &c);
      r->common_value = {c};
      break;
    }
    case Target::APrimeAndA: {
      residual_combined(r->witness, s, &r->witness_subset, &r->common_value);
      break;
    }
    case Target::Knaster: {
      double c = 0;
      residual_knaster(r->witness, s, &c);
      r->common_value = {c};
      const int q = s.group->order();
      r->witness_subset.clear();
      for (int g = 0; g < q; ++g) {
        if (g != s.group->identity()) r->witness_subset.push_back(g);
      }
      if (s.d == 2) r->theta = std::atan2(r->witness[2], r->witness[0]);
      break;
    }
  }
}

}  // namespace

SolverResult solve(const Scenario& s, int threads) {
  s.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const int n_starts = s.starts;
  std::vector<StartOutcome> outcomes(n_starts);

  int n_threads = threads;
  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
  }
  n_threads = std::min(n_threads, n_starts);
  if (n_threads <= 1) {
    for (int i = 0; i < n_starts; ++i) outcomes[i] = run_start(s, i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const int i = next.fetch_add(1);
          if (i >= n_starts) return;
          outcomes[i] = run_start(s, i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  int best = 0;
  int converged_starts = 0;
  for (int i = 0; i < n_starts; ++i) {
    if (outcomes[i].residual <= s.eps_solve) ++converged_starts;
    if (outcomes[i].residual < outcomes[best].residual) best = i;
  }

  SolverResult r;
  r.witness = outcomes[best].point;
  r.residual = outcomes[best].residual;
  r.best_start = best;
  r.starts_attempted = n_starts;
  r.converged_starts = converged_starts;
  r.converged = r.residual <= s.eps_solve;

  const double recheck = scenario_residual(r.witness, s);
  if (std::abs(recheck - r.residual) > s.verify_tol) {
    throw AssertionFailureError("witness residual failed re-verification");
  }
  fill_target_details(s, &r);

  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SolverResult solve_strict(const Scenario& s, int threads) {
  SolverResult r = solve(s, threads);
  if (!r.converged) {
    char msg[128];
    std::snprintf(msg, sizeof(msg), "no start converged; best residual %.17g after %d starts",
                  r.residual, r.starts_attempted);
    throw BudgetExhaustedError(msg);
  }
  return r;
}

SolverResult knaster_scan_1d(const Scenario& s, int grid) {
  s.validate();
  if (s.target != Target::Knaster || s.domain != DomainKind::RotationGroup || s.d != 2 ||
      s.group->order() != 3) {
    throw InvalidInputError("the 1-d rotation scan needs the q=3 scenario on SO(2)");
  }
  if (grid < 4) throw InvalidInputError("scan grid too small");
  const auto t0 = std::chrono::steady_clock::now();
  constexpr double kTwoPi = 6.283185307179586476925286766559;

  const auto rho_of = [](double theta) {
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    return std::vector<double>{c, -sn, sn, c};
  };
  // Root function: the two non-identity orbit values must agree.
  const auto diff_of = [&](double theta) {
    const std::vector<double> rho = rho_of(theta);
    const auto value = [&](int g) {
      return s.map.eval(matvec(rho, s.action.apply(g, s.base_point), 2))[0];
    };
    return value(1) - value(2);
  };

  std::vector<double> diffs(grid + 1);
  for (int i = 0; i <= grid; ++i) diffs[i] = diff_of(kTwoPi * i / grid);

  const auto result_at = [&](double theta) {
    SolverResult r;
    r.theta = theta;
    r.witness = rho_of(theta);
    double c = 0;
    r.residual = residual_knaster(r.witness, s, &c);
    r.common_value = {c};
    r.witness_subset = {1, 2};
    r.converged = r.residual <= s.eps_solve;
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };

  for (int i = 0; i < grid; ++i) {
    double theta = -1;
    if (std::abs(diffs[i]) <= 1e-13) {
      theta = kTwoPi * i / grid;
    } else if (diffs[i] * diffs[i + 1] < 0) {
      double lo = kTwoPi * i / grid;
      double hi = kTwoPi * (i + 1) / grid;
      double flo = diffs[i];
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = diff_of(mid);
        if (fmid == 0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0) == (fmid < 0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      theta = 0.5 * (lo + hi);
    } else {
      continue;
    }
    SolverResult r = result_at(theta);
    if (r.converged) return r;  // the max condition filters sign-change roots
  }
  throw ResolutionTooCoarseError("no verified rotation root at the configured grid");
}

}  // namespace coincider
