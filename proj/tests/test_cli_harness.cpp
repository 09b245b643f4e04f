#include <sys/wait.h>

#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "g2solv/harness.hpp"

using namespace g2solv;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(G2SOLV_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const Check* find_check(const RunReport& r, const std::string& name) {
  for (const Check& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("scalar serialization") {
  CHECK(to_json(Rational(3)) == Json("3/1"));
  CHECK(to_json(Rational(-2, 6)) == Json("-1/3"));
  CHECK(rational_from_json(Json("-1/3")) == Rational(-1, 3));
  CHECK(to_json(QuadExt(Rational(1), Rational(2))) == Json({{"a", "1/1"}, {"b", "2/1"}}));
}

TEST_CASE("reports round-trip through JSON") {
  const RunReport r = cmd_validate("example2");
  const Json j = to_json(r);
  CHECK(j.at("schema") == 1);
  const RunReport back = report_from_json(Json::parse(j.dump()));
  CHECK(to_json(back) == j);
  Json bad = j;
  bad["exit_status"] = 1;
  CHECK_THROWS_AS(report_from_json(bad), InvalidInput);
  bad = j;
  bad["schema"] = 2;
  CHECK_THROWS_AS(report_from_json(bad), InvalidInput);
}

TEST_CASE("validate") {
  const RunReport ex2 = cmd_validate("example2");
  CHECK(ex2.exit_status() == kExitPass);
  CHECK(ex2.results.at("eigenvalues") == Json({"3/5", "3/5", "6/5", "6/5", "3/5", "6/5"}));
  CHECK(cmd_validate("(0,0,0,0,0,0)").exit_status() == kExitPass);
  CHECK_THROWS_AS(cmd_validate("(0,0,e15,0,0,e11)"), InvalidInput);
  const RunReport jac = cmd_validate("(-e34,0,0,-e12,0,0)");
  CHECK(jac.exit_status() == kExitCheckFailed);
  for (int ex = 1; ex <= 6; ++ex) CHECK(cmd_validate("example" + std::to_string(ex)).all_pass());
}

TEST_CASE("tau") {
  const RunReport base = cmd_tau("example2", "base");
  CHECK(base.all_pass());
  CHECK(base.results.at("class_label") == Json({"T4"}));
  CHECK(base.inputs.at("metric") == "g");
  CHECK(cmd_tau("example2", "family:1,1").results.at("type") == "integrable");
  const Json no_r = cmd_tau("example2", "family:1,-1").results.at("class_label");
  CHECK(std::find(no_r.begin(), no_r.end(), Json("T1")) == no_r.end());
  CHECK(cmd_tau("example2", "isolated:2,-1").results.at("type") == "R ⊕ S²₀(R⁷) ⊕ R⁷");
  CHECK(cmd_tau("example2", "base", Metric::g_tilde).results.at("type") == "integrable");
  CHECK(cmd_tau("example2", "e147 - e237 + e567 + e125 + e136 + e246 - e345").results.at("type") == "integrable");
  CHECK(cmd_tau("example2", "e123").exit_status() == kExitCheckFailed);
  CHECK_THROWS_AS(cmd_tau("example2", "family:1"), InvalidInput);
  CHECK_THROWS_AS(cmd_tau("example2", "isolated:4,1"), InvalidInput);
  CHECK_THROWS_AS(cmd_tau("example2", "e12"), InvalidInput);
  CHECK_THROWS_AS(cmd_tau("example9", "base"), InvalidInput);
}

TEST_CASE("verify-paper groups") {
  CHECK(cmd_verify_paper("3").all_pass());
  CHECK(cmd_verify_paper("5").all_pass());

  const RunReport s4 = cmd_verify_paper("4");
  std::size_t table_cells = 0;
  for (const Check& c : s4.checks)
    if (c.anchor.starts_with("table 2 row")) ++table_cells;
  CHECK(table_cells == 33);
  const Check* summary = find_check(s4, "table 2 entries reproduced");
  REQUIRE(summary != nullptr);
  CHECK(summary->got == "32/33");
  const Check* e237 = find_check(s4, "d(e237)");
  REQUIRE(e237 != nullptr);
  CHECK_FALSE(e237->pass);
  for (const Check& c : s4.checks) CHECK_FALSE(c.anchor.empty());

  const RunReport s6 = cmd_verify_paper("6");
  std::size_t with_prefactor = 0;
  for (const Check& c : s6.checks)
    if (c.name.ends_with("with the -m/10 prefactor") && c.pass) ++with_prefactor;
  CHECK(with_prefactor == 6);
  CHECK_THROWS_AS(cmd_verify_paper("7"), InvalidInput);
}

TEST_CASE("search reports") {
  SearchConfig cfg;
  cfg.starts = 30;
  cfg.seed = 5;
  const std::string a = to_json(cmd_search("example2", cfg)).dump(2);
  CHECK(a == to_json(cmd_search("example2", cfg)).dump(2));
  const RunReport r1 = cmd_search("example1", cfg);
  CHECK(r1.all_pass());
  CHECK(r1.results.at("candidate_count") == 0);

  const SearchConfig from = search_config_from_json(Json::parse(R"({"search": {"starts": 12, "seed": 3, "match_tol": 1e-7}})"));
  CHECK(from.starts == 12);
  CHECK(from.seed == 3);
  CHECK(from.match_tol == doctest::Approx(1e-7));
  CHECK(from.residual_tol == doctest::Approx(1e-9));
  CHECK_THROWS_AS(search_config_from_json(Json::parse(R"({"search": 3})")), InvalidInput);
}

TEST_CASE("command-line exit codes") {
  CHECK(run_cli("validate example2") == 0);
  CHECK(run_cli("validate \"(0,0,0,0,0,0)\"") == 0);
  CHECK(run_cli("validate \"(0,0,e15,0,0,e11)\"") == 2);
  CHECK(run_cli("validate \"(-e34,0,0,-e12,0,0)\"") == 1);
  CHECK(run_cli("tau example2 --phi base") == 0);
  CHECK(run_cli("tau example2 --phi e123") == 1);
  CHECK(run_cli("search example2 --starts 0") == 2);
  CHECK(run_cli("search example1 --starts 10 --seed 7 --json") == 0);
  CHECK(run_cli("verify-paper --section 5") == 0);
  CHECK(run_cli("verify-paper --section 4") == 1);
  CHECK(run_cli("verify-paper --section 9") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("--help") == 0);

  const std::string cfg = "search_config_test.json";
  std::ofstream(cfg) << R"({"search": {"starts": 8, "seed": 1}})";
  CHECK(run_cli("search example3 --config " + cfg) == 0);
  CHECK(run_cli("search example3 --config missing.json") == 2);
}
