#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CmdResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/coincider_cli_out." + std::to_string(getpid());
  const std::string err_path = "/tmp/coincider_cli_err." + std::to_string(getpid());
  const std::string cmd =
      std::string(COINCIDER_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int rc = std::system(cmd.c_str());
  CmdResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string scenario(const std::string& name) {
  return std::string(COINCIDER_SCENARIO_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("homology subcommand reports the circle case") {
  const CmdResult r = run_cli("--json-only homology --family k-equal --q 3 --k 3 --p 3");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("overall") == "pass");
  CHECK(j.at("result").at("reduced_betti").at("3")[1] == 1);
  CHECK(j.at("subcommand") == "homology");
}

TEST_CASE("homology v1 family carries its own vanishing band") {
  const CmdResult r =
      run_cli("--json-only homology --family v1 --q 3 --k 2 --m 2 --p 2 --assert-connectivity");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("overall") == "pass");
  CHECK(j.at("result").at("claimed_vanishing_degree") == 1);
  CHECK(j.at("result").at("reduced_betti").at("2")[2] == 5);
}

TEST_CASE("cover-check classifies every off-diagonal sample") {
  const CmdResult r = run_cli("--json-only cover-check --q 4 --k 3 --samples 2000 --seed 1");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("overall") == "pass");
  CHECK(j.at("result").at("failures") == 0);
  CHECK(j.at("result").at("samples") == 2000);
  CHECK(j.at("seed") == 1);
  const CmdResult f = run_cli("--json-only cover-check --q 4 --k 3 --samples 2000 --seed 1 "
                              "--scalar float");
  CHECK(f.exit_code == 0);
  CHECK(json::parse(f.out).at("result").at("failures") == 0);
}

TEST_CASE("coincide converges on the antipodal scenario and is reproducible") {
  const std::string args = "--json-only coincide " + scenario("borsuk_ulam.json");
  const CmdResult a = run_cli(args);
  CHECK(a.exit_code == 0);
  const json j = json::parse(a.out);
  CHECK(j.at("overall") == "pass");
  CHECK(j.at("result").at("status") == "converged");
  CHECK(j.at("result").at("existence") == "guaranteed");
  CHECK(j.at("result").at("residual").get<double>() < 1e-8);
  const CmdResult b = run_cli(args);
  CHECK(a.out == b.out);  // byte-identical report for identical argv and seed
}

TEST_CASE("coincide reports budget exhaustion without crashing") {
  const CmdResult r = run_cli("--json-only coincide " + scenario("not_guaranteed.json"));
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.out);
  CHECK(j.at("overall") == "fail");
  CHECK(j.at("result").at("status") == "budget_exhausted");
  CHECK(j.at("result").at("existence") == "not guaranteed");
  CHECK(j.at("result").at("residual").get<double>() > 1.0);
}

TEST_CASE("knaster scan matches the closed-form angle") {
  const CmdResult r =
      run_cli("--json-only knaster " + scenario("knaster_q3_circle.json") + " --scan 4096");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  const double theta = j.at("result").at("theta").get<double>();
  const double closed = 3.14159265358979323846 + std::atan2(0.8, 0.6) - std::atan2(2.0, 1.0);
  CHECK(std::fabs(theta - closed) < 1e-6);
  CHECK(j.at("result").at("common_value")[0].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("knaster multi-start search runs on SO(3)") {
  const CmdResult r = run_cli("--json-only knaster " + scenario("knaster_q4_torus.json"));
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("result").at("residual").get<double>() < 1e-6);
  CHECK(j.at("result").at("witness").size() == 9);
}

TEST_CASE("selftest passes clean and fails under injected faults") {
  const CmdResult ok = run_cli("--json-only selftest --quick");
  CHECK(ok.exit_code == 0);
  const json j = json::parse(ok.out);
  CHECK(j.at("overall") == "pass");
  CHECK(j.at("rows").size() > 20);
  for (const auto& row : j.at("rows")) {
    CHECK(!row.at("anchor").get<std::string>().empty());
  }

  const CmdResult mult = run_cli("--json-only selftest --quick --inject-fault mult-table");
  CHECK(mult.exit_code == 1);
  const json jm = json::parse(mult.out);
  CHECK(jm.at("overall") == "fail");
  bool group_row_failed = false;
  for (const auto& row : jm.at("rows")) {
    if (row.at("name") == "group axioms") group_row_failed = !row.at("pass").get<bool>();
  }
  CHECK(group_row_failed);

  const CmdResult tol = run_cli("--json-only selftest --quick --inject-fault zero-tolerance");
  CHECK(tol.exit_code == 1);
  const json jt = json::parse(tol.out);
  bool tol_row_failed = false;
  for (const auto& row : jt.at("rows")) {
    if (row.at("name") == "float pattern tolerance") tol_row_failed = !row.at("pass").get<bool>();
  }
  CHECK(tol_row_failed);
}

TEST_CASE("selftest logs go to stderr and --json-only silences them") {
  const CmdResult loud = run_cli("cover-check --q 3 --k 2 --samples 200 --seed 0");
  CHECK(loud.exit_code == 0);
  CHECK(!loud.err.empty());
  CHECK(json::parse(loud.out).is_object());  // stdout stays pure JSON
  const CmdResult quiet = run_cli("--json-only cover-check --q 3 --k 2 --samples 200 --seed 0");
  CHECK(quiet.err.empty());
}

TEST_CASE("timings flag adds wall seconds without breaking determinism elsewhere") {
  const CmdResult r = run_cli("--json-only --timings cover-check --q 3 --k 2 --samples 200");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).contains("wall_seconds"));
  const CmdResult plain = run_cli("--json-only cover-check --q 3 --k 2 --samples 200");
  CHECK(!json::parse(plain.out).contains("wall_seconds"));
}

TEST_CASE("invalid input exits 2") {
  CHECK(run_cli("--json-only frobnicate").exit_code == 2);        // unknown subcommand
  CHECK(run_cli("--json-only selftest --bogus").exit_code == 2);  // unknown flag
  CHECK(run_cli("--json-only coincide /nonexistent.json").exit_code == 2);
  CHECK(run_cli("--json-only homology --family k-equal --q 5 --k 3 --p 4").exit_code == 2);
  CHECK(run_cli("--json-only cover-check --q 5 --k 9").exit_code == 2);
  const CmdResult usage = run_cli("selftest --bogus");
  CHECK(usage.err.find("Usage") != std::string::npos);
}

TEST_CASE("knaster subcommand rejects non-rotation scenarios") {
  const CmdResult r = run_cli("--json-only knaster " + scenario("borsuk_ulam.json"));
  CHECK(r.exit_code == 2);
}
