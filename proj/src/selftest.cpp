#include "coincider/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coincider/actions.hpp"
#include "coincider/arrangement.hpp"
#include "coincider/config_spaces.hpp"
#include "coincider/errors.hpp"
#include "coincider/group.hpp"
#include "coincider/homology.hpp"
#include "coincider/mapspec.hpp"
#include "coincider/orbit_tuple.hpp"
#include "coincider/patterns.hpp"
#include "coincider/solver.hpp"

namespace coincider {

namespace {

AssertionRow row(std::string name, std::string anchor, bool pass, std::string detail) {
  AssertionRow r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return std::string(buf);
}

std::string betti_string(const std::vector<long long>& b) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << "]";
  return os.str();
}

// Evenly spaced half-integer pool; q+1 values makes max-value ties frequent
// without putting most samples on the maximum diagonal.
std::vector<Rational> rational_pool(int q) {
  std::vector<Rational> pool;
  for (int i = 0; i <= q; ++i) pool.push_back(Rational(i - q / 2, 2));
  return pool;
}

// phi(g) > phi(h) for g in M, h outside; float counterpart of the exact test.
bool float_top_block(const FloatTuple& phi, const GroupSubset& M) {
  const int q = phi.group->order();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int g = 0; g < q; ++g) {
    if (M.contains(g)) {
      lo = std::min(lo, phi.at(g));
    } else {
      hi = std::max(hi, phi.at(g));
    }
  }
  return M.size() == q ? true : lo > hi;
}

}  // namespace

bool all_pass(const std::vector<AssertionRow>& rows) {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

int first_failure(const std::vector<AssertionRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].pass) return static_cast<int>(i);
  }
  return -1;
}

CoverCheckStats run_cover_check(int q, int k, long long samples, std::uint64_t seed,
                                bool rational) {
  if (q < 2 || q > 16) throw InvalidInputError("cover check requires 2 <= q <= 16");
  if (k < 2 || k > q) throw InvalidInputError("cover check requires 2 <= k <= q");
  if (samples < 1) throw InvalidInputError("cover check requires samples >= 1");
  const GroupPtr group = make_cyclic(q);
  const auto pool = rational_pool(q);
  std::vector<double> fpool(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) fpool[i] = pool[i].convert_to<double>();

  // Candidate top-block sets grouped by cardinality. U_M and U_M' intersect
  // only when |M| != |M'|, so hits within one size must be unique.
  std::vector<std::vector<GroupSubset>> by_size(static_cast<std::size_t>(q));
  for (int m = 1; m < q; ++m) {
    for (std::uint64_t mask : enumerate_subsets(q, m)) {
      by_size[static_cast<std::size_t>(m)].emplace_back(group, mask);
    }
  }

  CoverCheckStats stats;
  stats.per_m.assign(static_cast<std::size_t>(k), 0);
  std::mt19937_64 rng(seed);

  std::vector<Rational> rvals(static_cast<std::size_t>(q));
  std::vector<double> fvals(static_cast<std::size_t>(q));
  for (long long s = 0; s < samples; ++s) {
    ++stats.samples;
    for (int g = 0; g < q; ++g) {
      const std::size_t pick = static_cast<std::size_t>(rng() % pool.size());
      rvals[static_cast<std::size_t>(g)] = pool[pick];
      fvals[static_cast<std::size_t>(g)] = fpool[pick];
    }
    if (rational) {
      RationalTuple phi(group, 1, rvals);
      if (in_max_diagonal(phi, k)) {
        ++stats.skipped_max_diagonal;
        continue;
      }
      const TopBlockResult tb = top_block_classify(phi, k);
      ++stats.classified;
      if (tb.m < 1 || tb.m > k - 1 || tb.M.size() != tb.m) {
        ++stats.bad_multiplicity;
      } else {
        ++stats.per_m[static_cast<std::size_t>(tb.m)];
      }
      // One non-identity translate per sample, rotating through the group.
      const int g = 1 + static_cast<int>(s % (q - 1));
      const RationalTuple shifted = act_on_tuple(g, phi);
      const TopBlockResult tb2 = top_block_classify(shifted, k);
      if (tb2.m != tb.m || !(tb2.M == act_on_subset(g, tb.M))) ++stats.bad_equivariance;
      bool block_ok = true;
      for (int m = 1; m < q; ++m) {
        int hits = 0;
        bool hit_is_block = false;
        for (const auto& M : by_size[static_cast<std::size_t>(m)]) {
          if (in_top_block_set(phi, M)) {
            ++hits;
            if (M == tb.M) hit_is_block = true;
          }
        }
        if (hits > 1 || (m == tb.m && !(hits == 1 && hit_is_block))) block_ok = false;
      }
      if (!block_ok) ++stats.bad_top_block;
    } else {
      FloatTuple phi(group, 1, fvals);
      const ClusterOptions opts;
      if (in_max_diagonal(phi, k, opts)) {
        ++stats.skipped_max_diagonal;
        continue;
      }
      const TopBlockResult tb = top_block_classify(phi, k, opts);
      ++stats.classified;
      if (tb.m < 1 || tb.m > k - 1 || tb.M.size() != tb.m) {
        ++stats.bad_multiplicity;
      } else {
        ++stats.per_m[static_cast<std::size_t>(tb.m)];
      }
      const int g = 1 + static_cast<int>(s % (q - 1));
      const FloatTuple shifted = act_on_tuple(g, phi);
      const TopBlockResult tb2 = top_block_classify(shifted, k, opts);
      if (tb2.m != tb.m || !(tb2.M == act_on_subset(g, tb.M))) ++stats.bad_equivariance;
      bool block_ok = true;
      for (int m = 1; m < q; ++m) {
        int hits = 0;
        bool hit_is_block = false;
        for (const auto& M : by_size[static_cast<std::size_t>(m)]) {
          if (float_top_block(phi, M)) {
            ++hits;
            if (M == tb.M) hit_is_block = true;
          }
        }
        if (hits > 1 || (m == tb.m && !(hits == 1 && hit_is_block))) block_ok = false;
      }
      if (!block_ok) ++stats.bad_top_block;
    }
  }
  stats.failures = stats.bad_multiplicity + stats.bad_equivariance + stats.bad_top_block;
  return stats;
}

std::vector<AssertionRow> criterion_cover(std::uint64_t seed, long long samples_per_pair) {
  std::vector<AssertionRow> rows;
  long long equi_bad = 0, block_bad = 0, total = 0;
  int pair_index = 0;
  for (int q = 3; q <= 6; ++q) {
    for (int k = 2; k <= q; ++k) {
      const CoverCheckStats st =
          run_cover_check(q, k, samples_per_pair, seed + static_cast<std::uint64_t>(pair_index++),
                          /*rational=*/true);
      equi_bad += st.bad_equivariance;
      block_bad += st.bad_top_block;
      total += st.classified;
      std::ostringstream hist;
      for (int m = 1; m < k; ++m) hist << (m > 1 ? "," : "") << st.per_m[static_cast<std::size_t>(m)];
      rows.push_back(row(fmt("cover classification q=%d k=%d", q, k), anchors::kCover,
                         st.bad_multiplicity == 0 && st.classified + st.skipped_max_diagonal ==
                                                         st.samples,
                         fmt("classified=%lld skipped=%lld bad=%lld per-m=[%s]",
                             st.classified, st.skipped_max_diagonal, st.bad_multiplicity,
                             hist.str().c_str())));
    }
  }
  rows.push_back(row("cover classification is equivariant", anchors::kCoverEquivariant,
                     equi_bad == 0, fmt("%lld classified tuples, %lld violations", total, equi_bad)));
  rows.push_back(row("top-block membership is unique", anchors::kTopBlock, block_bad == 0,
                     fmt("%lld classified tuples, %lld violations", total, block_bad)));
  return rows;
}

std::vector<AssertionRow> criterion_homology_band(int threads, int q_max) {
  std::vector<AssertionRow> rows;
  const std::vector<int> primes = {2, 3, 5};
  for (int q = 2; q <= q_max; ++q) {
    for (int k = 2; k <= q; ++k) {
      const SubspaceArrangement a = k_equal_arrangement(q, k);
      const BettiReport rep = complement_betti(a, primes, /*assert_connectivity=*/false, threads);
      const bool pass = rep.vanishing_pass && rep.euler_check_pass &&
                        (!rep.cw_check_ran || rep.cw_check_pass);
      rows.push_back(row(fmt("no-k-equal band q=%d k=%d", q, k), anchors::kKEqualConn, pass,
                         fmt("beta~(F_2)=%s euler=%s cw=%s",
                             betti_string(rep.betti.at(2)).c_str(),
                             rep.euler_check_pass ? "ok" : "FAIL",
                             rep.cw_check_ran ? (rep.cw_check_pass ? "ok" : "FAIL") : "skipped")));
    }
  }
  {
    const BettiReport rep =
        complement_betti(k_equal_arrangement(3, 3), primes, false, threads);
    bool pass = true;
    for (int p : primes) pass = pass && rep.betti.at(p).size() > 1 && rep.betti.at(p)[1] == 1;
    rows.push_back(row("circle case beta~_1(q=3,k=3) = 1", anchors::kKEqualModel, pass,
                       fmt("beta~(F_2)=%s", betti_string(rep.betti.at(2)).c_str())));
  }
  {
    const BettiReport rep =
        complement_betti(k_equal_arrangement(4, 4), primes, false, threads);
    bool pass = true;
    for (int p : primes) pass = pass && rep.betti.at(p).size() > 2 && rep.betti.at(p)[2] == 1;
    rows.push_back(row("sphere case beta~_2(q=4,k=4) = 1", anchors::kKEqualModel, pass,
                       fmt("beta~(F_2)=%s", betti_string(rep.betti.at(2)).c_str())));
  }
  return rows;
}

std::vector<AssertionRow> criterion_v1_band(int threads, int case_count) {
  std::vector<AssertionRow> rows;
  const std::vector<int> primes = {2, 3, 5};
  struct Case {
    int m, q, k;
    int degree;       // frozen nonzero degree of the complement
    long long value;  // frozen betti number at that degree
  };
  // Frozen oracles: rank of H~ computed once from the lattice model and
  // pinned here; identical across F_2, F_3, F_5.
  std::vector<Case> cases = {{2, 3, 2, 2, 5}, {2, 3, 3, 3, 1}, {2, 4, 3, 4, 7}};
  if (case_count < static_cast<int>(cases.size())) cases.resize(static_cast<std::size_t>(case_count));
  for (const Case& c : cases) {
    const SubspaceArrangement a = v1_arrangement(c.m, c.q, c.k);
    const BettiReport rep = complement_betti(a, primes, /*assert_connectivity=*/false, threads);
    const int band = (c.m - 1) * (c.q - 1) + c.k - 3;
    bool pass = rep.vanishing_pass && rep.euler_check_pass && rep.claimed_vanishing_degree == band;
    for (int p : primes) {
      const auto& b = rep.betti.at(p);
      pass = pass && static_cast<int>(b.size()) > c.degree && b[static_cast<std::size_t>(c.degree)] == c.value;
    }
    rows.push_back(row(fmt("split-coordinate band m=%d q=%d k=%d", c.m, c.q, c.k), anchors::kV1Conn,
                       pass,
                       fmt("band<=%d beta~(F_2)=%s expected beta~_%d=%lld", band,
                           betti_string(rep.betti.at(2)).c_str(), c.degree, c.value)));
  }
  return rows;
}

std::vector<AssertionRow> criterion_pattern_fixed_points() {
  std::vector<AssertionRow> rows;
  for (int p : {3, 5, 7}) {
    const GroupPtr group = make_cyclic(p);
    bool pass = true;
    std::string bad;
    for (int k = 2; k <= p - 1; ++k) {
      const auto fixed = pattern_action_fixed_points(group, k);
      if (!fixed.empty()) {
        pass = false;
        bad = fmt("k=%d has %zu fixed patterns", k, fixed.size());
        break;
      }
    }
    if (pass && pattern_action_fixed_points(group, 1).size() != 1) {
      pass = false;
      bad = "k=1 should fix exactly the one-block pattern";
    }
    if (pass && pattern_action_fixed_points(group, p).size() != 1) {
      pass = false;
      bad = "k=p should fix exactly the discrete pattern";
    }
    rows.push_back(row(fmt("pattern action free p=%d", p), anchors::kPatternFpf, pass,
                       pass ? fmt("k=2..%d fixed-point free; k in {1,%d} fix one pattern each",
                                  p - 1, p)
                            : bad));
  }
  return rows;
}

std::vector<AssertionRow> criterion_subset_fixed_points() {
  std::vector<AssertionRow> rows;
  std::vector<GroupPtr> groups;
  for (int q = 2; q <= 8; ++q) groups.push_back(make_cyclic(q));
  groups.push_back(make_p_torus(2, 2));
  groups.push_back(make_p_torus(2, 3));
  for (const GroupPtr& group : groups) {
    const int q = group->order();
    bool pass = true;
    long long checked = 0;
    std::string bad;
    for (int m = 1; m < q && pass; ++m) {
      for (std::uint64_t mask : enumerate_subsets(q, m)) {
        ++checked;
        if (subset_is_group_fixed(GroupSubset(group, mask))) {
          pass = false;
          bad = fmt("m=%d mask=%llu is fixed", m, static_cast<unsigned long long>(mask));
          break;
        }
      }
    }
    if (pass && !subset_is_group_fixed(GroupSubset(group, (std::uint64_t{1} << q) - 1))) {
      pass = false;
      bad = "full subset must be fixed";
    }
    rows.push_back(row(fmt("subsets fixed-point free %s", group->label().c_str()),
                       anchors::kSubsetFpf, pass,
                       pass ? fmt("%lld proper subsets, none fixed", checked) : bad));
  }
  return rows;
}

std::vector<AssertionRow> criterion_orbit_map(std::uint64_t seed, int points) {
  std::mt19937_64 rng(seed);
  long long equi_checked = 0, equi_bad = 0;
  long long iff_checked = 0, iff_bad = 0;
  long long zero_cases = 0, nonzero_cases = 0;

  struct Setup {
    ActionRep rep;
    MapSpec map;
    int k;
    bool force_first_zero;  // zero out x1 to construct on-diagonal points
  };
  std::vector<Setup> setups;
  {
    // Regular translation action of Z/4; x1*x3 is invariant under the
    // half-turn, so every orbit has a 2-coincidence while 3-coincidences
    // stay generic.
    const GroupPtr z4 = make_cyclic(4);
    const ActionRep rep = make_regular_permutation(z4);
    setups.push_back({rep, MapSpec{4, {parse_expr("x1*x3", 4)}}, 2, false});
    setups.push_back({rep, MapSpec{4, {parse_expr("x1*x3", 4)}}, 3, false});
    setups.push_back(
        {rep, MapSpec{4, {parse_expr("x1 + x2*x3", 4), parse_expr("x1^2 - x4", 4)}}, 2, false});
  }
  {
    // Odd polynomial under the antipodal flip: hat lands on the diagonal
    // exactly on the zero set, reachable by pinning x1 = 0.
    const GroupPtr z2 = make_cyclic(2);
    const ActionRep rep = make_antipodal(z2, 3);
    setups.push_back({rep, MapSpec{3, {parse_expr("x1*(x2*x3 + 1) + x1^3", 3)}}, 2, true});
  }
  {
    const GroupPtr t22 = make_p_torus(2, 2);
    const ActionRep rep = make_regular_permutation(t22);
    setups.push_back({rep, MapSpec{4, {parse_expr("x1 + x2^2", 4), parse_expr("x3*x4", 4)}}, 2,
                      false});
  }

  for (int i = 0; i < points; ++i) {
    Setup& su = setups[static_cast<std::size_t>(i) % setups.size()];
    const int d = su.rep.d;
    const int q = su.rep.group->order();
    std::vector<Rational> x(static_cast<std::size_t>(d));
    for (auto& c : x) c = random_rational(rng, 20, 8);
    if (su.force_first_zero && i % 2 == 0) x[0] = Rational(0);

    const RationalTuple hat = hat_map(su.map, su.rep, x);
    for (int h = 0; h < q; ++h) {
      const RationalTuple lhs = act_on_tuple(h, hat);
      const RationalTuple rhs = hat_map(su.map, su.rep, su.rep.apply(h, x));
      ++equi_checked;
      if (!(lhs.values == rhs.values)) ++equi_bad;
    }

    const SubsetResidualExact res = residual_A_exact(x, su.map, su.rep, su.k);
    const bool zero = res.value == Rational(0);
    const bool diag = in_kwise_diagonal(hat, su.k);
    ++iff_checked;
    if (zero != diag) ++iff_bad;
    if (zero) {
      ++zero_cases;
    } else {
      ++nonzero_cases;
    }
  }

  std::vector<AssertionRow> rows;
  rows.push_back(row("orbit map equivariance (exact)", anchors::kHatEquivariant, equi_bad == 0,
                     fmt("%lld translations checked, %lld violations", equi_checked, equi_bad)));
  rows.push_back(row("zero residual iff diagonal membership", anchors::kCoincRedef,
                     iff_bad == 0 && zero_cases > 0 && nonzero_cases > 0,
                     fmt("%lld points (%lld on-diagonal, %lld off), %lld violations", iff_checked,
                         zero_cases, nonzero_cases, iff_bad)));
  return rows;
}

std::vector<AssertionRow> criterion_solver_nonemptiness(std::uint64_t seed, int starts,
                                                        int threads) {
  std::vector<AssertionRow> rows;
  {
    Scenario s;
    s.domain = DomainKind::Sphere;
    s.d = 3;
    s.group = make_cyclic(2);
    s.action = make_antipodal(s.group, 3);
    s.map = MapSpec{3, {parse_expr("x1 + x2^2", 3)}};
    s.target = Target::A;
    s.k = 2;
    s.seed = seed;
    s.starts = starts;
    const SolverResult r = solve(s, threads);
    const bool pass = s.existence() == Existence::Guaranteed && r.converged &&
                      r.residual < 1e-8 && r.converged_starts >= (95 * starts) / 100;
    rows.push_back(row("antipodal coincidence on S^2", anchors::kNonempty, pass,
                       fmt("existence=%s residual=%.3e converged %d/%d",
                           existence_name(s.existence()).c_str(), r.residual, r.converged_starts,
                           r.starts_attempted)));
  }
  {
    Scenario s;
    s.domain = DomainKind::Sphere;
    s.d = 4;
    s.group = make_cyclic(3);
    s.action = make_complex_roots(s.group, 4);
    s.map = MapSpec{4, {parse_expr("x1", 4)}};
    s.target = Target::A;
    s.k = 3;
    s.seed = seed;
    s.starts = starts;
    const SolverResult r = solve(s, threads);
    const bool pass = s.existence() == Existence::Guaranteed && r.converged &&
                      r.residual < 1e-8 && r.converged_starts >= 1;
    rows.push_back(row("triple coincidence on S^3 under Z/3", anchors::kNonempty, pass,
                       fmt("existence=%s residual=%.3e converged %d/%d",
                           existence_name(s.existence()).c_str(), r.residual, r.converged_starts,
                           r.starts_attempted)));
  }
  return rows;
}

std::vector<AssertionRow> criterion_knaster(std::uint64_t seed, int starts, int threads) {
  std::vector<AssertionRow> rows;
  {
    // q=3 on the circle: one rotation angle, scan against the closed form
    // theta* = pi + atan2(u2,u1) - atan2(x2,x1) for f = u.x.
    Scenario s;
    s.domain = DomainKind::RotationGroup;
    s.d = 2;
    s.group = make_cyclic(3);
    s.action = make_ig_permutation(s.group);
    s.map = MapSpec{2, {parse_expr("0.6*x1 + 0.8*x2", 2)}};
    s.target = Target::Knaster;
    s.k = 2;
    const double inv = 1.0 / std::sqrt(5.0);
    s.base_point = {inv, 2.0 * inv};
    s.seed = seed;
    s.starts = starts;
    const SolverResult r = knaster_scan_1d(s, 4096);
    const double closed = std::atan2(0.8, 0.6) - std::atan2(s.base_point[1], s.base_point[0]) +
                          3.14159265358979323846;
    double delta = std::fabs(r.theta - closed);
    delta = std::fmin(delta, std::fabs(delta - 2.0 * 3.14159265358979323846));
    const bool pass = r.converged && delta < 1e-6;
    rows.push_back(row("rotation scan matches closed form (q=3)", anchors::kKnaster, pass,
                       fmt("theta=%.9f closed=%.9f |delta|=%.3e residual=%.3e", r.theta, closed,
                           delta, r.residual)));
  }
  {
    // q=4 torus acting on the 2-sphere inside the sum-zero subspace; search
    // over rotations of R^3.
    Scenario s;
    s.domain = DomainKind::RotationGroup;
    s.d = 3;
    s.group = make_p_torus(2, 2);
    s.action = make_ig_permutation(s.group);
    s.map = MapSpec{3, {parse_expr("x1 + x2^2", 3)}};
    s.target = Target::Knaster;
    s.k = 2;
    s.eps_solve = 1e-6;
    const double n = std::sqrt(14.0);
    s.base_point = {1.0 / n, 2.0 / n, 3.0 / n};
    s.seed = seed;
    s.starts = starts;
    const SolverResult r = solve(s, threads);
    const bool pass = r.converged && r.residual < 1e-6 && r.converged_starts >= 1;
    rows.push_back(row("rotation search on SO(3) (q=4 torus)", anchors::kKnaster, pass,
                       fmt("residual=%.3e converged %d/%d", r.residual, r.converged_starts,
                           r.starts_attempted)));
  }
  return rows;
}

std::vector<AssertionRow> criterion_negative_controls(std::uint64_t seed) {
  std::vector<AssertionRow> rows;
  Scenario s;
  s.domain = DomainKind::Sphere;
  s.d = 3;
  s.group = make_cyclic(2);
  s.action = make_antipodal(s.group, 3);
  s.map = MapSpec{3,
                  {parse_expr("x1", 3), parse_expr("x2", 3), parse_expr("x3", 3),
                   parse_expr("1 + x1", 3)}};
  s.target = Target::A;
  s.k = 2;
  s.seed = seed;
  s.starts = 20;
  rows.push_back(row("threshold violated reports not guaranteed", anchors::kGenusThreshold,
                     s.existence() == Existence::NotGuaranteed,
                     fmt("d=%d m=%d k=%d existence=%s", s.d, s.map.m(), s.k,
                         existence_name(s.existence()).c_str())));
  bool surfaced = false;
  std::string detail = "solve_strict unexpectedly succeeded";
  try {
    (void)solve_strict(s);
  } catch (const BudgetExhaustedError& e) {
    surfaced = true;
    detail = e.what();
  }
  rows.push_back(
      row("empty coincidence set exhausts budget cleanly", anchors::kGenusThreshold, surfaced,
          detail));
  return rows;
}

std::vector<AssertionRow> run_selftest(const SelftestOptions& opts) {
  std::vector<AssertionRow> rows;

  {
    // Group axioms, exhaustively on Z/6 and the Klein group. The mult-table
    // fault makes row 1 non-bijective.
    std::vector<std::uint16_t> mult(36);
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) mult[static_cast<std::size_t>(a) * 6 + b] =
          static_cast<std::uint16_t>((a + b) % 6);
    }
    if (opts.fault == Fault::MultTable) mult[1 * 6 + 2] = mult[1 * 6 + 1];
    bool pass = true;
    std::string detail = "identity, inverses, associativity exhaustive on Z/6 and (Z/2)^2";
    try {
      const GroupTable g(6, mult, "Z/6");
      g.validate();
      make_p_torus(2, 2)->validate();
    } catch (const Error& e) {
      pass = false;
      detail = e.what();
    }
    rows.push_back(row("group axioms", anchors::kGroup, pass, detail));
  }
  {
    // Clustered float comparison; the zero-tolerance fault moves a 1e-12 tie
    // into the ambiguity band.
    ClusterOptions copts;
    if (opts.fault == Fault::ZeroTolerance) {
      copts.cluster_eps = 0.0;
      copts.ambiguity_hi = 1e-8;
    }
    const FloatTuple phi(make_cyclic(3), 1, {0.5, 0.5 + 1e-12, 2.0});
    bool pass = false;
    std::string detail;
    try {
      const CoincidencePattern pat = coincidence_pattern(phi, copts);
      pass = pat.blocks.size() == 2 && pat.blocks[0] == std::vector<int>{0, 1};
      detail = fmt("1e-12 tie clustered into %d blocks", pat.block_count());
    } catch (const AmbiguousPatternError& e) {
      pass = false;
      detail = e.what();
    }
    rows.push_back(row("float pattern tolerance", anchors::kPattern, pass, detail));
  }

  const long long cover_samples = opts.quick ? 2000 : 100000;
  const int orbit_points = opts.quick ? 1000 : 10000;
  const int starts = opts.quick ? 40 : 100;
  const int knaster_starts = opts.quick ? 40 : 200;

  auto append = [&rows](std::vector<AssertionRow> more) {
    for (auto& r : more) rows.push_back(std::move(r));
  };
  append(criterion_cover(opts.seed, cover_samples));
  append(criterion_homology_band(opts.threads, opts.quick ? 5 : 7));
  append(criterion_v1_band(opts.threads, opts.quick ? 2 : 3));
  append(criterion_pattern_fixed_points());
  append(criterion_subset_fixed_points());
  append(criterion_orbit_map(opts.seed, orbit_points));
  append(criterion_solver_nonemptiness(opts.seed, starts, opts.threads));
  append(criterion_knaster(opts.seed, knaster_starts, opts.threads));
  append(criterion_negative_controls(opts.seed));
  return rows;
}

}  // namespace coincider
