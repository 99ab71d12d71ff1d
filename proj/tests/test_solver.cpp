#include <cmath>
#include <random>

#include "coincider/config_spaces.hpp"
#include "coincider/errors.hpp"
#include "coincider/solver.hpp"
#include "doctest.h"

using namespace coincider;

namespace {

constexpr double kPi = 3.14159265358979323846;

Scenario borsuk_scenario() {
  Scenario s;
  s.domain = DomainKind::Sphere;
  s.d = 3;
  s.group = make_cyclic(2);
  s.action = make_antipodal(s.group, 3);
  s.map = map_from_json_text(R"({"expr":"x1 + x2^2"})", 3);
  s.target = Target::A;
  s.k = 2;
  return s;
}

Scenario knaster3_scenario(const std::string& expr) {
  Scenario s;
  s.domain = DomainKind::RotationGroup;
  s.d = 2;
  s.group = make_cyclic(3);
  s.action = make_ig_permutation(s.group);
  s.map = map_from_json_text(expr, 2);
  s.target = Target::Knaster;
  s.base_point = {1.0 / std::sqrt(5.0), 2.0 / std::sqrt(5.0)};
  return s;
}

std::vector<double> rotation2(double theta) {
  return {std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)};
}

double angle_mod_2pi(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a;
}

}  // namespace

TEST_CASE("pairwise residual on the antipodal sphere") {
  const Scenario s = borsuk_scenario();
  const SubsetResidual zero = residual_A({0.0, 1.0, 0.0}, s);
  CHECK(zero.value == 0.0);
  CHECK(zero.subset == std::vector<int>{0, 1});
  CHECK(zero.exact_enumeration);

  const SubsetResidual four = residual_A({1.0, 0.0, 0.0}, s);
  CHECK(four.value == doctest::Approx(4.0));

  Scenario constant = s;
  constant.map = map_from_json_text(R"({"expr":"1/3"})", 3);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(-1, 1);
  for (int i = 0; i < 10; ++i) {
    const std::vector<double> x = {unif(rng), unif(rng), unif(rng)};
    CHECK(residual_A(x, constant).value == 0.0);
  }
}

TEST_CASE("pairwise residual is invariant along orbits") {
  Scenario s;
  s.domain = DomainKind::Sphere;
  s.d = 4;
  s.group = make_cyclic(4);
  s.action = make_regular_permutation(s.group);
  s.map = map_from_json_text(R"({"exprs":["x1 + x2*x3","x4^2"]})", 4);
  s.target = Target::A;
  s.k = 3;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-1, 1);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x = {unif(rng), unif(rng), unif(rng), unif(rng)};
    const double base = residual_A(x, s).value;
    for (int g = 1; g < 4; ++g) {
      CHECK(residual_A(s.action.apply(g, x), s).value == doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact pairwise residual agrees with diagonal membership") {
  const GroupPtr group = make_cyclic(4);
  const ActionRep action = make_regular_permutation(group);
  const MapSpec f = map_from_json_text(R"({"expr":"x1"})", 4);

  // Orbit values of f are the coordinates of x, so ties are easy to force.
  const std::vector<Rational> tied = {Rational(1), Rational(1), Rational(2), Rational(3)};
  CHECK(residual_A_exact(tied, f, action, 2).value == 0);
  CHECK(residual_A_exact(tied, f, action, 3).value != 0);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> x;
    for (int c = 0; c < 4; ++c) x.push_back(random_rational(rng, 4, 3));
    for (int k = 2; k <= 4; ++k) {
      const bool zero = residual_A_exact(x, f, action, k).value == 0;
      CHECK(zero == in_kwise_diagonal(hat_map(f, action, x), k));
    }
  }
}

TEST_CASE("max-coincidence residual") {
  Scenario s;
  s.domain = DomainKind::Sphere;
  s.d = 3;
  s.group = make_cyclic(3);
  s.action = make_regular_permutation(s.group);
  s.map = map_from_json_text(R"({"expr":"x1"})", 3);
  s.target = Target::APrime;
  s.k = 2;

  // Orbit values (v_0,v_1,v_2) = (x_0,x_2,x_1).
  std::vector<int> subset;
  double common = 0;
  CHECK(residual_Aprime({2, 1, 2}, s, &subset, &common) == 0.0);  // values (2,2,1)
  CHECK(subset == std::vector<int>{0, 1});
  CHECK(common == 2.0);
  CHECK(residual_Aprime({1, 2, 1}, s, &subset, &common) == 1.0);  // values (1,1,2)
  CHECK(common == 2.0);

  s.k = 3;
  CHECK(residual_Aprime({5, 5, 5}, s) == 0.0);
}

TEST_CASE("rotation residual for the three-point orbit") {
  const Scenario s = knaster3_scenario(R"({"expr":"x1"})");  // f = <u,.>, u = e_1
  const double alpha = std::atan2(s.base_point[1], s.base_point[0]);
  const double phi_u = 0.0;

  // Orbit symmetric about u with the base point sent opposite u: residual 0.
  const double theta_star = kPi + phi_u - alpha;
  double common = 0;
  CHECK(residual_knaster(rotation2(theta_star), s, &common) == doctest::Approx(0.0));
  CHECK(common == doctest::Approx(0.5).epsilon(1e-9));  // |u| cos(2pi/3 + pi) = |u|/2

  // Rotating the base point onto u equalizes the other two values but the
  // max condition fails: the hinge contributes (3/2)^2.
  CHECK(residual_knaster(rotation2(phi_u - alpha), s) == doctest::Approx(2.25));

  const Scenario constant = knaster3_scenario(R"({"expr":"1/4"})");
  CHECK(residual_knaster(rotation2(1.234), constant) == 0.0);
}

TEST_CASE("scenario JSON round trip") {
  const Scenario s = scenario_from_json_text(
      R"({"domain":{"kind":"sphere","d":4},"group":{"kind":"cyclic","q":3},
          "action":"complex_roots","map":{"expr":"x1","m":1},
          "target":"A_prime","k":2,"seed":7,"starts":100})");
  CHECK(s.domain == DomainKind::Sphere);
  CHECK(s.d == 4);
  CHECK(s.group->order() == 3);
  CHECK(s.action.kind == ActionKind::ComplexRoots);
  CHECK(s.map.m() == 1);
  CHECK(s.target == Target::APrime);
  CHECK(s.k == 2);
  CHECK(s.seed == 7);
  CHECK(s.starts == 100);
  CHECK(s.eps_solve == 1e-8);
  CHECK(s.existence() == Existence::Guaranteed);  // free action, 4 > 1

  CHECK_THROWS_AS(scenario_from_json_text("{}"), InvalidInputError);
  CHECK_THROWS_AS(scenario_from_json_text("nonsense"), InvalidInputError);
  CHECK_THROWS_AS(scenario_from_json_text(
                      R"({"domain":{"kind":"sphere","d":4},"group":{"kind":"cyclic","q":3},
                          "action":"complex_roots","map":{"expr":"x1","m":1},
                          "target":"A_prime","k":9})"),
                  InvalidInputError);
}

TEST_CASE("existence flag") {
  Scenario s = borsuk_scenario();
  CHECK(s.existence() == Existence::Guaranteed);  // 3 > (2-1)(1-1)+2-1 = 1

  // m = 4 violates the genus inequality: 3 > 4 fails.
  s.map = map_from_json_text(R"({"exprs":["x1","x2","x3","1 + x1"]})", 3);
  CHECK(s.existence() == Existence::NotGuaranteed);

  // A non-free action cannot promise anything.
  Scenario fixed;
  fixed.domain = DomainKind::Sphere;
  fixed.d = 3;
  fixed.group = make_cyclic(3);
  fixed.action = make_regular_permutation(fixed.group);
  fixed.map = map_from_json_text(R"({"expr":"x1"})", 3);
  fixed.target = Target::A;
  fixed.k = 2;
  CHECK(fixed.existence() == Existence::Unknown);

  CHECK(knaster3_scenario(R"({"expr":"x1"})").existence() == Existence::Guaranteed);

  Scenario torus;
  torus.domain = DomainKind::RotationGroup;
  torus.d = 3;
  torus.group = make_p_torus(2, 2);
  torus.action = make_ig_permutation(torus.group);
  torus.map = map_from_json_text(R"({"expr":"x1"})", 3);
  torus.target = Target::Knaster;
  torus.base_point = {1, 0, 0};
  CHECK(torus.existence() == Existence::Unknown);  // exponent 2 is an experiment
}

TEST_CASE("solver finds the Borsuk-Ulam zero set") {
  Scenario s = borsuk_scenario();
  s.starts = 100;
  s.seed = 0;
  const SolverResult r = solve(s, 1);
  CHECK(r.converged);
  CHECK(r.residual < 1e-8);
  CHECK(r.converged_starts >= 95);
  CHECK(std::abs(r.witness[0]) < 1e-9);  // the solution set is the circle x1 = 0
  CHECK(r.witness_subset == std::vector<int>{0, 1});

  // Determinism: identical scenario + seed reproduces the result bit for bit,
  // independent of the thread count.
  const SolverResult again = solve(s, 1);
  CHECK(again.witness == r.witness);
  CHECK(again.residual == r.residual);
  CHECK(again.best_start == r.best_start);
  const SolverResult pooled = solve(s, 2);
  CHECK(pooled.witness == r.witness);
  CHECK(pooled.residual == r.residual);
}

TEST_CASE("solver finds coincidences for the rotation action on the 3-sphere") {
  Scenario s;
  s.domain = DomainKind::Sphere;
  s.d = 4;
  s.group = make_cyclic(3);
  s.action = make_complex_roots(s.group, 4);
  s.map = map_from_json_text(R"({"expr":"x1"})", 4);
  s.target = Target::A;
  s.k = 2;
  s.starts = 100;
  CHECK(s.existence() == Existence::Guaranteed);

  const SolverResult r = solve(s);
  CHECK(r.converged);
  CHECK(r.converged_starts >= 1);
  CHECK(r.residual < 1e-8);

  // Independent recheck: evaluate f on the witness orbit directly.
  CHECK(static_cast<int>(r.witness_subset.size()) == 2);
  const double va = s.map.eval(s.action.apply(r.witness_subset[0], r.witness))[0];
  const double vb = s.map.eval(s.action.apply(r.witness_subset[1], r.witness))[0];
  CHECK((va - vb) * (va - vb) <= r.residual + 1e-15);

  // A max-coincidence witness is in particular a pairwise witness.
  Scenario prime = s;
  prime.target = Target::APrime;
  const SolverResult rp = solve(prime);
  CHECK(rp.converged);
  CHECK(residual_A(rp.witness, s).value <= prime.eps_solve);
}

TEST_CASE("budget exhaustion is a legal outcome") {
  Scenario s = borsuk_scenario();
  s.map = map_from_json_text(R"({"exprs":["x1","x2","x3","1 + x1"]})", 3);
  s.starts = 20;
  CHECK(s.existence() == Existence::NotGuaranteed);
  const SolverResult r = solve(s);
  CHECK_FALSE(r.converged);
  CHECK(r.converged_starts == 0);
  CHECK(r.residual == doctest::Approx(4.0).epsilon(1e-6));  // min is 4 at x1 = 0
  CHECK_THROWS_AS(solve_strict(s), BudgetExhaustedError);
}

TEST_CASE("rotation scan matches the closed form for linear functionals") {
  // u = (3/5, 4/5), base point (1,2)/sqrt(5).
  const Scenario s = knaster3_scenario(R"({"expr":"0.6*x1 + 0.8*x2"})");
  const SolverResult r = knaster_scan_1d(s);
  CHECK(r.converged);
  CHECK(r.residual <= 1e-16);
  const double alpha = std::atan2(2.0, 1.0);
  const double theta_star = angle_mod_2pi(kPi + std::atan2(0.8, 0.6) - alpha);
  CHECK(angle_mod_2pi(r.theta) == doctest::Approx(theta_star).epsilon(1e-10));
  CHECK(r.common_value[0] == doctest::Approx(0.5).epsilon(1e-9));

  // Constant map: every angle works and the scan settles on zero.
  const SolverResult c = knaster_scan_1d(knaster3_scenario(R"({"expr":"2/7"})"));
  CHECK(c.theta == 0.0);
  CHECK(c.residual == 0.0);

  // Squared coordinate: the scan verifies its own root, hinge included.
  const SolverResult sq = knaster_scan_1d(knaster3_scenario(R"({"expr":"x2^2"})"));
  CHECK(sq.converged);
  CHECK(sq.residual <= 1e-8);
  const double recheck = residual_knaster(sq.witness, knaster3_scenario(R"({"expr":"x2^2"})"));
  CHECK(recheck == doctest::Approx(sq.residual).epsilon(1e-12));
}

TEST_CASE("scan reports a too-coarse grid instead of guessing") {
  // The difference of orbit values oscillates fast enough that a 4-point grid
  // sees no sign change; one more point resolves it.
  const Scenario s = knaster3_scenario(R"({"expr":"x1^4*x2^4"})");
  CHECK_THROWS_AS(knaster_scan_1d(s, 4), ResolutionTooCoarseError);
  CHECK(knaster_scan_1d(s, 5).converged);
  CHECK_THROWS_AS(knaster_scan_1d(s, 2), InvalidInputError);
}

TEST_CASE("rotation search in SO(3) for the exponent-2 orbit") {
  Scenario s;
  s.domain = DomainKind::RotationGroup;
  s.d = 3;
  s.group = make_p_torus(2, 2);
  s.action = make_ig_permutation(s.group);
  s.map = map_from_json_text(R"({"expr":"x1"})", 3);
  s.target = Target::Knaster;
  double n2 = 1 + 4 + 9;
  s.base_point = {1 / std::sqrt(n2), 2 / std::sqrt(n2), 3 / std::sqrt(n2)};
  s.starts = 40;
  s.eps_solve = 1e-6;
  const SolverResult r = solve(s);
  CHECK(r.converged);
  CHECK(r.converged_starts >= 1);
}

TEST_CASE("greedy subset fallback") {
  Scenario s;
  s.domain = DomainKind::Sphere;
  s.d = 2;
  s.group = make_cyclic(65);  // q > 64 cannot enumerate bit masks
  s.action = make_complex_roots(s.group, 2);
  s.map = map_from_json_text(R"({"expr":"x1"})", 2);
  s.target = Target::A;
  s.k = 2;
  const std::vector<double> x = {0.6, 0.8};
  const SubsetResidual r = residual_A(x, s);
  CHECK_FALSE(r.exact_enumeration);
  CHECK(r.subset.size() == 2);

  // For k = 2 the greedy growth is exhaustive over pairs.
  double best = std::numeric_limits<double>::infinity();
  for (int g = 0; g < 65; ++g) {
    for (int h = g + 1; h < 65; ++h) {
      const double a = s.map.eval(s.action.apply(g, x))[0];
      const double b = s.map.eval(s.action.apply(h, x))[0];
      best = std::min(best, (a - b) * (a - b));
    }
  }
  CHECK(r.value == doctest::Approx(best).epsilon(1e-12));
}
