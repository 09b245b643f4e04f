#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "g2solv/search.hpp"

namespace g2solv {

using Json = nlohmann::json;

/// Exit-code contract shared by every command.
enum ExitStatus : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct Check {
  std::string name;
  /// Table row or theorem the check reproduces.
  std::string anchor;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct RunReport {
  static constexpr int kSchema = 1;

  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void add(std::string name, std::string anchor, std::string expected, std::string got, bool pass) {
    checks.push_back({std::move(name), std::move(anchor), std::move(expected), std::move(got), pass});
  }
  bool all_pass() const;
  int exit_status() const { return all_pass() ? kExitPass : kExitCheckFailed; }
  std::size_t failures() const;
};

Json to_json(const RunReport& r);
RunReport report_from_json(const Json& j);

/// Rationals as "p/q" (denominator always written), QuadExt as {"a", "b"}
/// with value a + b i sqrt2.
Json to_json(const Rational& q);
Json to_json(const QuadExt& q);
Rational rational_from_json(const Json& j);

/// Human-readable rendering: one line per check plus a summary.
std::string to_text(const RunReport& r);

/// Jacobi and d^2 = 0 for an example id, a fixture path, or a literal
/// nilpotent tuple "(0,0,e12,...)"; ad_{e_7} eigenvalues echoed against the
/// printed table. Throws InvalidInput on malformed input.
RunReport cmd_validate(std::string_view target);

enum class Metric { automatic, g, g_tilde };

/// tau report of phi on an example. phi is "base", "family:r,s",
/// "isolated:i,eps" or a form literal. Metric::automatic uses g for "base"
/// and the printed g~ connection otherwise.
RunReport cmd_tau(std::string_view example, std::string_view phi, Metric metric = Metric::automatic);

/// Groups of the reproduction suite: "all", "2" (conventions), "3"
/// (reduction), "4" (solutions on example 2), "5" (no-structure kernels),
/// "6" (complex solutions).
RunReport cmd_verify_paper(std::string_view section);

/// Search configuration from a JSON object {"search": {...}}; missing keys
/// keep their defaults.
SearchConfig search_config_from_json(const Json& j, SearchConfig base = {});

RunReport cmd_search(std::string_view example, const SearchConfig& cfg);

}  // namespace g2solv
