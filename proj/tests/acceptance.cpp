// Acceptance gate: one line per criterion, each a conjunction of assertion
// rows plus a wall-clock budget. Exits nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coincider/selftest.hpp"

namespace {

using coincider::AssertionRow;

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<std::vector<AssertionRow>()> run;
};

}  // namespace

int main() {
  const std::uint64_t seed = 0;
  const std::vector<Criterion> criteria = {
      {"1 cover construction, q=3..6, 1e5 exact samples per pair", 60.0,
       [&] { return coincider::criterion_cover(seed, 100000); }},
      {"2 homology vanishing band, q<=7, p in {2,3,5}", 300.0,
       [&] { return coincider::criterion_homology_band(0); }},
      {"3 split-coordinate vanishing band, three (m,q,k) cases", 120.0,
       [&] { return coincider::criterion_v1_band(0); }},
      {"4 pattern fixed-point freeness, p in {3,5,7}", 5.0,
       [&] { return coincider::criterion_pattern_fixed_points(); }},
      {"5 subset-space fixed-point freeness, q<=8", 5.0,
       [&] { return coincider::criterion_subset_fixed_points(); }},
      {"6 orbit map equivariance and residual iff diagonal, 1e4 points", 30.0,
       [&] { return coincider::criterion_orbit_map(seed, 10000); }},
      {"7 solver nonemptiness in guaranteed regimes, 100 starts", 60.0,
       [&] { return coincider::criterion_solver_nonemptiness(seed, 100, 0); }},
      {"8 rotation realization: scan vs closed form, SO(3) search", 130.0,
       [&] { return coincider::criterion_knaster(seed, 200, 0); }},
      {"9 negative controls: threshold flag and budget exhaustion", 30.0,
       [&] { return coincider::criterion_negative_controls(seed); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<AssertionRow> rows;
    bool threw = false;
    std::string what;
    try {
      rows = c.run();
    } catch (const std::exception& e) {
      threw = true;
      what = e.what();
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool rows_ok = !threw && coincider::all_pass(rows);
    const bool time_ok = wall <= c.budget_seconds;
    const bool pass = rows_ok && time_ok;
    if (!pass) ++failures;
    std::printf("criterion %-60s %s (%.1fs <= %.0fs, %zu rows)\n", c.label.c_str(),
                pass ? "PASS" : "FAIL", wall, c.budget_seconds, rows.size());
    if (threw) std::printf("  exception: %s\n", what.c_str());
    if (!threw && !rows_ok) {
      for (const AssertionRow& r : rows) {
        if (!r.pass) {
          std::printf("  failed row: %s [%s] %s\n", r.name.c_str(), r.anchor.c_str(),
                      r.detail.c_str());
        }
      }
    }
    if (!time_ok) std::printf("  over budget\n");
    std::fflush(stdout);
  }
  std::printf("%s: %d/%zu criteria pass\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
