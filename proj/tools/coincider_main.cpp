#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coincider/arrangement.hpp"
#include "coincider/errors.hpp"
#include "coincider/homology.hpp"
#include "coincider/reports.hpp"
#include "coincider/selftest.hpp"
#include "coincider/solver.hpp"
#include "json.hpp"

namespace {

using coincider::AssertionRow;
using coincider::RunReport;
using nlohmann::json;

struct GlobalFlags {
  bool json_only = false;
  bool timings = false;
};

void log_line(const GlobalFlags& g, const std::string& line) {
  if (!g.json_only) std::cerr << line << "\n";
}

void log_rows(const GlobalFlags& g, const std::vector<AssertionRow>& rows) {
  if (g.json_only) return;
  for (const auto& r : rows) {
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " -- " << r.detail << "\n";
  }
  const int ff = coincider::first_failure(rows);
  if (ff >= 0) {
    std::cerr << "first failure: " << rows[static_cast<std::size_t>(ff)].name << " ["
              << rows[static_cast<std::size_t>(ff)].anchor << "]\n";
  }
}

/// Prints the report and maps the row conjunction to the exit contract:
/// 0 all rows pass, 1 some row failed.
int finish(const GlobalFlags& g, RunReport& rep, double wall_seconds,
           const std::string& result_json = "") {
  rep.wall_seconds = wall_seconds;
  log_rows(g, rep.rows);
  std::cout << coincider::run_report_to_json(rep, g.timings, result_json) << "\n";
  return rep.overall() ? 0 : 1;
}

std::vector<int> parse_primes(const std::string& csv) {
  std::vector<int> primes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    primes.push_back(std::stoi(item));
  }
  if (primes.empty()) throw coincider::InvalidInputError("no primes given");
  for (int p : primes) {
    if (!coincider::is_prime(p)) {
      throw coincider::InvalidInputError("coefficient modulus must be prime, got " +
                                         std::to_string(p));
    }
  }
  return primes;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coincider::InvalidInputError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_homology(const GlobalFlags& g, const std::string& family, int q, int k, int m,
                 const std::string& primes_csv, bool assert_connectivity, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<int> primes = parse_primes(primes_csv);
  coincider::SubspaceArrangement a;
  if (family == "k-equal") {
    a = coincider::k_equal_arrangement(q, k);
  } else if (family == "v1") {
    a = coincider::v1_arrangement(m, q, k);
  } else {
    throw coincider::InvalidInputError("unknown family: " + family);
  }
  const coincider::BettiReport rep =
      coincider::complement_betti(a, primes, assert_connectivity, threads);

  RunReport run;
  run.subcommand = "homology";
  run.parameters = json{{"family", family}, {"q", q},       {"k", k},
                        {"m", m},           {"p", primes},  {"assert_connectivity", assert_connectivity},
                        {"threads", threads}}
                       .dump();
  std::string band = "beta~_i = 0 for i <= " + std::to_string(rep.claimed_vanishing_degree);
  run.rows.push_back(AssertionRow{
      "vanishing band",
      family == "k-equal" ? coincider::anchors::kKEqualConn : coincider::anchors::kV1Conn,
      rep.vanishing_pass,
      rep.vanishing_pass
          ? band
          : band + "; fails at degree " + std::to_string(rep.offending_degree) + " mod " +
                std::to_string(rep.offending_prime)});
  run.rows.push_back(AssertionRow{"euler cross-check", coincider::anchors::kKEqualModel,
                                  rep.euler_check_pass,
                                  "alternating chain count equals betti alternation"});
  if (rep.cw_check_ran) {
    run.rows.push_back(AssertionRow{"cw model cross-check", coincider::anchors::kKEqualModel,
                                    rep.cw_check_pass,
                                    "independent cell model agrees in every degree"});
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, run, wall, coincider::betti_report_to_json(rep));
}

int run_cover_check(const GlobalFlags& g, int q, int k, long long samples, std::uint64_t seed,
                    const std::string& scalar) {
  const auto t0 = std::chrono::steady_clock::now();
  if (scalar != "rational" && scalar != "float") {
    throw coincider::InvalidInputError("--scalar must be rational or float");
  }
  const coincider::CoverCheckStats st =
      coincider::run_cover_check(q, k, samples, seed, scalar == "rational");

  RunReport run;
  run.subcommand = "cover-check";
  run.seed = seed;
  run.parameters = json{{"q", q}, {"k", k}, {"samples", samples}, {"seed", seed},
                        {"scalar", scalar}}
                       .dump();
  char buf[160];
  std::snprintf(buf, sizeof(buf), "classified=%lld skipped=%lld", st.classified,
                st.skipped_max_diagonal);
  run.rows.push_back(AssertionRow{"every sample off the maximum diagonal lands in some V_m",
                                  coincider::anchors::kCover,
                                  st.bad_multiplicity == 0 &&
                                      st.classified + st.skipped_max_diagonal == st.samples,
                                  buf});
  std::snprintf(buf, sizeof(buf), "%lld violations", st.bad_equivariance);
  run.rows.push_back(AssertionRow{"classification commutes with translation",
                                  coincider::anchors::kCoverEquivariant, st.bad_equivariance == 0,
                                  buf});
  std::snprintf(buf, sizeof(buf), "%lld violations", st.bad_top_block);
  run.rows.push_back(AssertionRow{"top-block set is unique within its cardinality",
                                  coincider::anchors::kTopBlock, st.bad_top_block == 0, buf});

  json stats{{"samples", st.samples},
             {"skipped_max_diagonal", st.skipped_max_diagonal},
             {"classified", st.classified},
             {"failures", st.failures},
             {"per_m", std::vector<long long>(st.per_m.begin() + 1, st.per_m.end())}};
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, run, wall, stats.dump(2));
}

int run_coincide(const GlobalFlags& g, const std::string& path, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const coincider::Scenario s = coincider::scenario_from_json_text(read_file(path));
  log_line(g, "scenario loaded: target=" + coincider::target_name(s.target) +
                  " existence=" + coincider::existence_name(s.existence()));
  const coincider::SolverResult r = coincider::solve(s, threads);

  RunReport run;
  run.subcommand = "coincide";
  run.seed = s.seed;
  run.parameters = json{{"scenario", path}, {"threads", threads}, {"seed", s.seed}}.dump();
  char buf[160];
  std::snprintf(buf, sizeof(buf), "residual=%.6e eps=%.1e converged %d/%d", r.residual,
                s.eps_solve, r.converged_starts, r.starts_attempted);
  run.rows.push_back(AssertionRow{"witness residual within tolerance",
                                  s.existence() == coincider::Existence::Guaranteed
                                      ? coincider::anchors::kNonempty
                                      : coincider::anchors::kGenusThreshold,
                                  r.converged, buf});
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, run, wall, coincider::solver_result_to_json(r, s));
}

int run_knaster(const GlobalFlags& g, const std::string& path, int scan_grid, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const coincider::Scenario s = coincider::scenario_from_json_text(read_file(path));
  if (s.target != coincider::Target::Knaster) {
    throw coincider::InvalidInputError("knaster subcommand requires a scenario with target knaster");
  }

  RunReport run;
  run.subcommand = "knaster";
  run.seed = s.seed;
  run.parameters =
      json{{"scenario", path}, {"scan", scan_grid}, {"threads", threads}, {"seed", s.seed}}.dump();

  coincider::SolverResult r;
  char buf[200];
  if (scan_grid > 0) {
    try {
      r = coincider::knaster_scan_1d(s, scan_grid);
      std::snprintf(buf, sizeof(buf), "theta=%.9f residual=%.6e", r.theta, r.residual);
      run.rows.push_back(
          AssertionRow{"scan root realizes the rotation", coincider::anchors::kKnaster,
                       r.converged, buf});
    } catch (const coincider::ResolutionTooCoarseError& e) {
      run.rows.push_back(AssertionRow{"scan root realizes the rotation",
                                      coincider::anchors::kKnaster, false, e.what()});
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return finish(g, run, wall);
    }
  } else {
    r = coincider::solve(s, threads);
    std::snprintf(buf, sizeof(buf), "residual=%.6e converged %d/%d", r.residual,
                  r.converged_starts, r.starts_attempted);
    run.rows.push_back(AssertionRow{"rotation search reaches tolerance",
                                    coincider::anchors::kKnaster, r.converged, buf});
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, run, wall, coincider::solver_result_to_json(r, s));
}

int run_selftest_cmd(const GlobalFlags& g, const std::string& fault, std::uint64_t seed,
                     int threads, bool quick) {
  const auto t0 = std::chrono::steady_clock::now();
  coincider::SelftestOptions opts;
  opts.seed = seed;
  opts.threads = threads;
  opts.quick = quick;
  if (fault == "mult-table") {
    opts.fault = coincider::Fault::MultTable;
  } else if (fault == "zero-tolerance") {
    opts.fault = coincider::Fault::ZeroTolerance;
  } else if (!fault.empty()) {
    throw coincider::InvalidInputError("unknown fault: " + fault);
  }

  RunReport run;
  run.subcommand = "selftest";
  run.seed = seed;
  run.parameters = json{{"inject_fault", fault.empty() ? "none" : fault},
                        {"seed", seed},
                        {"threads", threads},
                        {"quick", quick}}
                       .dump();
  run.rows = coincider::run_selftest(opts);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, run, wall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coincider: verified invariants and coincidence solvers for finite group actions"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json-only", g.json_only, "suppress stderr logs, print only the JSON report");
  app.add_flag("--timings", g.timings, "include wall-clock seconds in the report");

  std::string family = "k-equal";
  int q = 0, k = 0, m = 2, threads = 0;
  std::string primes_csv = "2,3,5";
  bool assert_connectivity = false;
  auto* hom = app.add_subcommand("homology", "reduced homology of a coordinate-equality "
                                             "arrangement complement, with cross-checks");
  hom->add_option("--family", family, "k-equal | v1")->capture_default_str();
  hom->add_option("--q", q, "number of coordinates")->required();
  hom->add_option("--k", k, "coincidence multiplicity")->required();
  hom->add_option("--m", m, "target dimension (v1 family)")->capture_default_str();
  hom->add_option("--p", primes_csv, "comma-separated coefficient primes")->capture_default_str();
  hom->add_flag("--assert-connectivity", assert_connectivity,
                "abort with an error when the vanishing band fails");
  hom->add_option("--threads", threads, "worker threads (0 = serial)")->capture_default_str();

  long long samples = 100000;
  std::uint64_t seed = 0;
  std::string scalar = "rational";
  int cq = 0, ck = 0;
  auto* cover = app.add_subcommand("cover-check", "randomized classification check of scalar "
                                                  "orbit tuples into the top-block cover");
  cover->add_option("--q", cq, "group order")->required();
  cover->add_option("--k", ck, "coincidence multiplicity")->required();
  cover->add_option("--samples", samples, "sample count")->capture_default_str();
  cover->add_option("--seed", seed, "rng seed")->capture_default_str();
  cover->add_option("--scalar", scalar, "rational | float")->capture_default_str();

  std::string scenario_path;
  int co_threads = 0;
  auto* co = app.add_subcommand("coincide", "multi-start search for a coincidence witness "
                                            "described by a scenario file");
  co->add_option("scenario", scenario_path, "scenario JSON file")->required();
  co->add_option("--threads", co_threads, "worker threads (0 = serial)")->capture_default_str();

  std::string kn_path;
  int scan_grid = 0, kn_threads = 0;
  auto* kn = app.add_subcommand("knaster", "rotation making a function constant on the "
                                           "non-identity part of a fixed orbit");
  kn->add_option("scenario", kn_path, "scenario JSON file")->required();
  kn->add_option("--scan", scan_grid, "grid size for the one-parameter scan (0 = multi-start)")
      ->capture_default_str();
  kn->add_option("--threads", kn_threads, "worker threads (0 = serial)")->capture_default_str();

  std::string fault;
  std::uint64_t st_seed = 0;
  int st_threads = 0;
  bool quick = false;
  auto* st = app.add_subcommand("selftest", "the full acceptance matrix");
  st->add_option("--inject-fault", fault, "mult-table | zero-tolerance (negative controls)");
  st->add_option("--seed", st_seed, "rng seed")->capture_default_str();
  st->add_option("--threads", st_threads, "worker threads (0 = serial)")->capture_default_str();
  st->add_flag("--quick", quick, "reduced sample and start counts for smoke runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (hom->parsed()) {
      return run_homology(g, family, q, k, m, primes_csv, assert_connectivity, threads);
    }
    if (cover->parsed()) return run_cover_check(g, cq, ck, samples, seed, scalar);
    if (co->parsed()) return run_coincide(g, scenario_path, co_threads);
    if (kn->parsed()) return run_knaster(g, kn_path, scan_grid, kn_threads);
    if (st->parsed()) return run_selftest_cmd(g, fault, st_seed, st_threads, quick);
    std::cerr << app.help() << std::flush;
    return 2;
  } catch (const coincider::InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const coincider::NonRationalError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const coincider::Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
