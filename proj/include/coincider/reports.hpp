#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coincider/homology.hpp"
#include "coincider/selftest.hpp"
#include "coincider/solver.hpp"

namespace coincider {

/// Everything one invocation emits: the echoed parameters, the assertion
/// rows with their claim anchors, and the conjunction status. Timing is
/// kept out of the serialized form unless explicitly requested so reruns
/// with identical (argv, seed) byte-match.
struct RunReport {
  std::string subcommand;
  std::string parameters;  // canonical JSON text of the echoed arguments
  std::uint64_t seed = 0;
  std::vector<AssertionRow> rows;
  double wall_seconds = 0.0;

  bool overall() const { return all_pass(rows); }
};

/// Serializers produce pretty-printed JSON with sorted keys; doubles use the
/// shortest round-trip form, so equal inputs give equal bytes.
std::string betti_report_to_json(const BettiReport& rep);
std::string solver_result_to_json(const SolverResult& r, const Scenario& s);

/// result_json, when nonempty, is attached under "result".
std::string run_report_to_json(const RunReport& rep, bool with_timings,
                               const std::string& result_json = "");

}  // namespace coincider
