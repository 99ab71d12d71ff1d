#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "coincider/arrangement.hpp"
#include "coincider/homology.hpp"
#include "coincider/patterns.hpp"
#include "coincider/reports.hpp"
#include "coincider/selftest.hpp"
#include "coincider/solver.hpp"
#include "json.hpp"

namespace py = pybind11;

namespace {

using namespace coincider;

std::string homology_report(const std::string& family, int q, int k, int m,
                            const std::vector<int>& primes, bool assert_connectivity,
                            int threads) {
  SubspaceArrangement a;
  if (family == "k-equal") {
    a = k_equal_arrangement(q, k);
  } else if (family == "v1") {
    a = v1_arrangement(m, q, k);
  } else {
    throw InvalidInputError("unknown family: " + family);
  }
  return betti_report_to_json(complement_betti(a, primes, assert_connectivity, threads));
}

std::string cover_check_json(int q, int k, long long samples, std::uint64_t seed,
                             bool rational) {
  const CoverCheckStats st = run_cover_check(q, k, samples, seed, rational);
  nlohmann::json j{{"samples", st.samples},
                   {"skipped_max_diagonal", st.skipped_max_diagonal},
                   {"classified", st.classified},
                   {"failures", st.failures},
                   {"bad_multiplicity", st.bad_multiplicity},
                   {"bad_equivariance", st.bad_equivariance},
                   {"bad_top_block", st.bad_top_block},
                   {"per_m", std::vector<long long>(st.per_m.begin() + 1, st.per_m.end())}};
  return j.dump();
}

std::string solve_scenario(const std::string& scenario_json, int threads) {
  const Scenario s = scenario_from_json_text(scenario_json);
  return solver_result_to_json(solve(s, threads), s);
}

std::string knaster_scan(const std::string& scenario_json, int grid) {
  const Scenario s = scenario_from_json_text(scenario_json);
  return solver_result_to_json(knaster_scan_1d(s, grid), s);
}

std::string selftest_json(bool quick, std::uint64_t seed, int threads) {
  SelftestOptions opts;
  opts.quick = quick;
  opts.seed = seed;
  opts.threads = threads;
  nlohmann::json rows = nlohmann::json::array();
  for (const AssertionRow& r : run_selftest(opts)) {
    rows.push_back({{"name", r.name}, {"anchor", r.anchor}, {"pass", r.pass},
                    {"detail", r.detail}});
  }
  return rows.dump();
}

std::vector<std::vector<std::vector<int>>> patterns_py(int q, int k) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const CoincidencePattern& p : enumerate_patterns(q, k)) out.push_back(p.blocks);
  return out;
}

std::vector<std::vector<std::vector<int>>> fixed_patterns_py(int q, int k) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const CoincidencePattern& p : pattern_action_fixed_points(make_cyclic(q), k)) {
    out.push_back(p.blocks);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "verified invariants and coincidence solvers for finite group actions";

  py::register_exception<InvalidInputError>(mod, "InvalidInputError", PyExc_ValueError);
  py::register_exception<BudgetExhaustedError>(mod, "BudgetExhaustedError", PyExc_RuntimeError);

  mod.def("homology_report", &homology_report, py::arg("family"), py::arg("q"), py::arg("k"),
          py::arg("m") = 2, py::arg("primes") = std::vector<int>{2, 3, 5},
          py::arg("assert_connectivity") = false, py::arg("threads") = 0,
          "Reduced homology of the arrangement complement, as a JSON report string.");
  mod.def("cover_check", &cover_check_json, py::arg("q"), py::arg("k"),
          py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("rational") = true,
          "Randomized top-block classification check; JSON stats string.");
  mod.def("solve_scenario", &solve_scenario, py::arg("scenario_json"), py::arg("threads") = 0,
          "Multi-start coincidence search from a scenario JSON string.");
  mod.def("knaster_scan", &knaster_scan, py::arg("scenario_json"), py::arg("grid") = 4096,
          "One-parameter rotation scan for circle scenarios.");
  mod.def("selftest", &selftest_json, py::arg("quick") = true, py::arg("seed") = 0,
          py::arg("threads") = 0, "Acceptance matrix rows as a JSON array string.");
  mod.def("enumerate_patterns", &patterns_py, py::arg("q"), py::arg("k"),
          "All partitions of 0..q-1 into exactly k blocks.");
  mod.def("pattern_fixed_points", &fixed_patterns_py, py::arg("q"), py::arg("k"),
          "k-block patterns fixed by every cyclic translation.");
  mod.def("admissible_partition_count", &admissible_partition_count, py::arg("q"), py::arg("k"),
          "Partitions with all blocks of size 1 or >= k; equals the lattice size.");
}
