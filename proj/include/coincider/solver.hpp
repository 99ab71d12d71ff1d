#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "coincider/actions.hpp"
#include "coincider/group.hpp"
#include "coincider/mapspec.hpp"
#include "coincider/rational.hpp"

namespace coincider {

enum class DomainKind { Sphere, RotationGroup };
enum class Target { A, APrime, APrimeAndA, Knaster };
enum class Existence { Guaranteed, NotGuaranteed, Unknown };

std::string domain_kind_name(DomainKind kind);
std::string target_name(Target t);
std::string existence_name(Existence e);

/// One solver problem: find x on the domain manifold with zero residual for
/// the chosen coincidence target.
struct Scenario {
  DomainKind domain = DomainKind::Sphere;
  int d = 0;  // sphere: ambient dimension; rotation group: matrix size n
  GroupPtr group;
  ActionRep action;
  MapSpec map;  // target A_prime_and_A reads component 0 as f1, the rest as h
  Target target = Target::A;
  int k = 2;
  std::vector<double> base_point;  // knaster only: the point whose orbit is rotated
  double eps_solve = 1e-8;
  double verify_tol = 1e-12;
  int starts = 100;
  int max_iters = 400;
  std::uint64_t seed = 0;

  void validate() const;

  /// Whether a solution is promised: on a sphere with a free action this is
  /// the genus inequality d > (q-1)(m-1)+k-1; non-free actions give Unknown.
  /// The rotation search is Guaranteed for groups of odd prime exponent and
  /// Unknown for 2-groups.
  Existence existence() const;
};

/// Parses the scenario JSON:
///   {"domain":{"kind":"sphere","d":4},"group":{"kind":"cyclic","q":3},
///    "action":"complex_roots","map":{"expr":"x1","m":1},
///    "target":"A_prime","k":2,"seed":7,"starts":100}
Scenario scenario_from_json_text(const std::string& text);

/// min over k-element subsets S of the group of
/// sum over unordered pairs {g,h} in S of |f(gx) - f(hx)|^2.
struct SubsetResidual {
  double value = 0;
  std::vector<int> subset;  // ascending element indices of the minimizing S
  bool exact_enumeration = true;
};
SubsetResidual residual_A(const std::vector<double>& x, const Scenario& s);

/// Exact variant over rationals; zero iff hat(x) lies in the k-wise diagonal.
struct SubsetResidualExact {
  Rational value;
  std::vector<int> subset;
  bool exact_enumeration = true;
};
SubsetResidualExact residual_A_exact(const std::vector<Rational>& x, const MapSpec& f,
                                     const ActionRep& action, int k);

/// With v_g = f(gx) sorted descending, (v_(1) - v_(k))^2; zero iff the k
/// largest orbit values all equal the maximum.  f must be scalar.
double residual_Aprime(const std::vector<double>& x, const Scenario& s,
                       std::vector<int>* subset = nullptr, double* common = nullptr);

/// sum_{g != e} (f(rho g x) - cbar)^2 + max(0, f(rho x) - min_{g != e} f(rho g x))^2
/// where cbar is the mean of the g != e values and rho is a row-major d x d
/// rotation matrix.
double residual_knaster(const std::vector<double>& rho, const Scenario& s,
                        double* common = nullptr);

/// The scenario's objective at a domain point (unit vector or rotation matrix).
double scenario_residual(const std::vector<double>& point, const Scenario& s);

struct SolverResult {
  bool converged = false;          // best residual <= eps_solve
  std::vector<double> witness;     // unit vector, or row-major rotation matrix
  double residual = std::numeric_limits<double>::infinity();
  std::vector<int> witness_subset;     // the k coinciding elements (A targets)
  std::vector<double> common_value;    // the shared value c (per output component)
  double theta = std::numeric_limits<double>::quiet_NaN();  // 1-d rotation scans
  int starts_attempted = 0;
  int converged_starts = 0;
  int best_start = -1;
  bool greedy_warning = false;  // subset search fell back to greedy selection
  double wall_seconds = 0;
};

/// Multi-start simplex descent in tangent charts with retraction.  Returns
/// the minimal-residual start (ties broken by start index); never throws on
/// exhaustion -- converged stays false.
SolverResult solve(const Scenario& s, int threads = 0);

/// Like solve(), but throws BudgetExhaustedError when no start converges.
SolverResult solve_strict(const Scenario& s, int threads = 0);

/// Dense grid scan + bisection over SO(2) for q=3 rotation scenarios.
/// Returns the smallest verified angle; throws ResolutionTooCoarseError when
/// the grid sees no root.
SolverResult knaster_scan_1d(const Scenario& s, int grid = 4096);

}  // namespace coincider
