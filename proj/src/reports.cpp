#include "coincider/reports.hpp"

#include <cmath>

#include "json.hpp"

namespace coincider {

namespace {

using nlohmann::json;

json rows_to_json(const std::vector<AssertionRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"name", r.name}, {"anchor", r.anchor}, {"pass", r.pass},
                       {"detail", r.detail}});
  }
  return arr;
}

}  // namespace

std::string betti_report_to_json(const BettiReport& rep) {
  json j;
  j["family"] = rep.family;
  j["ambient"] = rep.ambient;
  j["q"] = rep.q;
  j["k"] = rep.k;
  if (rep.family == "v1") j["m"] = rep.m;
  j["lattice_size"] = rep.lattice_size;
  j["primes"] = rep.primes;
  json betti = json::object();
  for (const auto& [p, b] : rep.betti) betti[std::to_string(p)] = b;
  j["reduced_betti"] = betti;
  j["claimed_vanishing_degree"] = rep.claimed_vanishing_degree;
  j["vanishing_pass"] = rep.vanishing_pass;
  if (!rep.vanishing_pass) {
    j["offending_degree"] = rep.offending_degree;
    j["offending_prime"] = rep.offending_prime;
  }
  j["euler_check_pass"] = rep.euler_check_pass;
  j["cw_check_ran"] = rep.cw_check_ran;
  if (rep.cw_check_ran) j["cw_check_pass"] = rep.cw_check_pass;
  j["annotations"] = rep.annotations;
  return j.dump(2);
}

std::string solver_result_to_json(const SolverResult& r, const Scenario& s) {
  json j;
  j["scenario"] = {
      {"domain", domain_kind_name(s.domain)},
      {"d", s.d},
      {"group", s.group->label()},
      {"q", s.group->order()},
      {"action", action_kind_name(s.action.kind)},
      {"m", s.map.m()},
      {"target", target_name(s.target)},
      {"k", s.k},
      {"eps_solve", s.eps_solve},
      {"verify_tol", s.verify_tol},
      {"starts", s.starts},
      {"max_iters", s.max_iters},
      {"seed", s.seed},
  };
  j["existence"] = existence_name(s.existence());
  j["status"] = r.converged ? "converged" : "budget_exhausted";
  j["converged"] = r.converged;
  j["residual"] = r.residual;
  j["witness"] = r.witness;
  j["witness_subset"] = r.witness_subset;
  j["common_value"] = r.common_value;
  if (std::isfinite(r.theta)) j["theta"] = r.theta;
  j["converged_starts"] = r.converged_starts;
  j["starts_attempted"] = r.starts_attempted;
  j["best_start"] = r.best_start;
  if (r.greedy_warning) j["greedy_warning"] = true;
  return j.dump(2);
}

std::string run_report_to_json(const RunReport& rep, bool with_timings,
                               const std::string& result_json) {
  json j;
  j["subcommand"] = rep.subcommand;
  j["parameters"] = rep.parameters.empty() ? json::object() : json::parse(rep.parameters);
  j["seed"] = rep.seed;
  j["rows"] = rows_to_json(rep.rows);
  j["overall"] = rep.overall() ? "pass" : "fail";
  if (!result_json.empty()) j["result"] = json::parse(result_json);
  if (with_timings) j["wall_seconds"] = rep.wall_seconds;
  return j.dump(2);
}

}  // namespace coincider
