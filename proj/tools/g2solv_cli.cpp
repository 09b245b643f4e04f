#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "g2solv/harness.hpp"

using namespace g2solv;

namespace {

void print(const RunReport& rep, bool json) {
  if (json) {
    std::cout << to_json(rep).dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : rep.results.items()) {
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    std::cout << key << ": " << (text.size() <= 160 ? text : "(" + std::to_string(value.size()) + " entries, see --json)")
              << "\n";
  }
  std::cout << to_text(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for torsion G2 structures on rank-one solvable extensions"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");
  app.fallthrough();

  std::string target;
  auto* validate = app.add_subcommand("validate", "Check Jacobi and d^2 = 0 for a fixture or a literal tuple");
  validate->add_option("target", target, "example1..example6, a fixture path, or \"(0,0,e12,...)\"")->required();

  std::string example, phi = "base", metric = "auto";
  auto* tau = app.add_subcommand("tau", "Intrinsic torsion and type of a G2 form");
  tau->add_option("example", example, "example1..example6")->required();
  tau->add_option("--phi", phi, "base | family:r,s | isolated:i,eps | form literal")->capture_default_str();
  tau->add_option("--metric", metric, "auto | g | gt")->check(CLI::IsMember({"auto", "g", "gt"}))->capture_default_str();

  std::string section = "all";
  auto* verify = app.add_subcommand("verify-paper", "Reproduce every printed claim and report mismatches");
  verify->add_option("--section", section, "all | 2 | 3 | 4 | 5 | 6")
      ->check(CLI::IsMember({"all", "2", "3", "4", "5", "6"}))
      ->capture_default_str();

  SearchConfig cfg;
  std::string config_path;
  auto* search = app.add_subcommand("search", "Numeric search for parallel spinors with torsion in the ansatz");
  search->add_option("example", example, "example1..example6")->required();
  auto* starts = search->add_option("--starts", cfg.starts, "Number of random starts")->check(CLI::Range(1, 100000000));
  auto* seed = search->add_option("--seed", cfg.seed, "Base seed");
  search->add_option("--config", config_path, "JSON file with a \"search\" block")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    RunReport rep;
    if (*validate) {
      rep = cmd_validate(target);
    } else if (*tau) {
      const Metric m = metric == "g" ? Metric::g : metric == "gt" ? Metric::g_tilde : Metric::automatic;
      rep = cmd_tau(example, phi, m);
    } else if (*verify) {
      rep = cmd_verify_paper(section);
    } else {
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        SearchConfig from_file = search_config_from_json(Json::parse(in));
        // Flags given on the command line win over the file.
        if (*starts) from_file.starts = cfg.starts;
        if (*seed) from_file.seed = cfg.seed;
        cfg = from_file;
      }
      rep = cmd_search(example, cfg);
    }
    print(rep, json);
    return rep.exit_status();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
