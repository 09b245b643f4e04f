#include <set>

#include "doctest.h"
#include "g2solv/fixtures.hpp"
#include "g2solv/search.hpp"
#include "g2solv/solver.hpp"

using namespace g2solv;

namespace {

SearchCandidate exact_candidate(const KForm<Rational>& t, const Spinor<Rational>& psi) {
  SearchCandidate c;
  const auto a = TorsionAnsatz<Rational>::from_form(t);
  for (std::size_t i = 0; i < 11; ++i) c.c[i] = a.c[i].to_double();
  double n = 0;
  for (const auto& x : psi) n += x.to_double() * x.to_double();
  for (std::size_t i = 0; i < 8; ++i) c.psi[i] = psi[i].to_double() / std::sqrt(n);
  return c;
}

bool same(const SearchResult& a, const SearchResult& b) {
  if (a.converged != b.converged || a.trivial != b.trivial || a.candidates.size() != b.candidates.size()) return false;
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    const auto& x = a.candidates[i];
    const auto& y = b.candidates[i];
    if (x.start != y.start || x.c != y.c || x.psi != y.psi || x.residual != y.residual) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("known solutions are exact zeros of the double-precision system") {
  const SearchCandidate fam = exact_candidate(family_torsion(2, 3), family_spinor(2, 3));
  CHECK(nearest_known_solution(fam).first == "family");
  CHECK(nearest_known_solution(fam).second < 1e-12);
  for (int i = 1; i <= 3; ++i)
    for (int eps : {1, -1}) {
      const auto [label, d] = nearest_known_solution(exact_candidate(isolated_torsion(i, eps), isolated_spinor(i, eps)));
      CHECK(label == "isolated " + std::to_string(i) + (eps > 0 ? "+" : "-"));
      CHECK(d < 1e-12);
    }
  // The transcribed T1+ is not in the solution set.
  CHECK(nearest_known_solution(exact_candidate(printed_isolated_torsion(1, 1), isolated_spinor(1, 1))).second > 1e-3);
}

TEST_CASE("search is deterministic and the parallel run equals the serial reference") {
  const BilinearSystem sys = BilinearSystem::from_connection(printed_connection(2));
  SearchConfig cfg;
  cfg.starts = 60;
  cfg.seed = 11;
  const SearchResult a = numeric_search(sys, cfg);
  const SearchResult b = numeric_search(sys, cfg);
  const SearchResult s = numeric_search_serial(sys, cfg);
  CHECK(same(a, b));
  CHECK(same(a, s));
  cfg.seed = 12;
  CHECK_FALSE(same(a, numeric_search(sys, cfg)));
}

TEST_CASE("example 2: every candidate is a known solution") {
  SearchConfig cfg;
  cfg.starts = 120;
  const SearchResult r = numeric_search("example2", cfg);
  CHECK(r.candidates.size() > 0);
  std::set<std::string> labels;
  for (const auto& c : r.candidates) {
    CHECK(c.residual < cfg.residual_tol);
    CHECK(c.torsion_norm > cfg.torsion_min);
    REQUIRE(c.match.has_value());
    labels.insert(*c.match);
  }
  CHECK(labels.contains("family"));
  CHECK(labels.size() >= 4);
}

TEST_CASE("examples without solutions give no candidates") {
  SearchConfig cfg;
  cfg.starts = 150;
  for (const char* ex : {"example1", "example3", "example4", "example5", "example6"}) {
    CAPTURE(ex);
    const SearchResult r = numeric_search(ex, cfg);
    CHECK(r.candidates.empty());
  }
}

TEST_CASE("configuration errors") {
  SearchConfig cfg;
  cfg.starts = 0;
  CHECK_THROWS_AS(numeric_search("example2", cfg), InvalidInput);
  cfg.starts = 1;
  cfg.residual_tol = 0;
  CHECK_THROWS_AS(numeric_search("example2", cfg), InvalidInput);
}
