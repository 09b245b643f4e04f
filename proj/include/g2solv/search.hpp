#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2solv/lie.hpp"
#include "g2solv/spin.hpp"

namespace g2solv {

struct SearchConfig {
  int starts = 500;
  std::uint64_t seed = 7;
  /// Accept a polished point when the stacked residual is below this.
  double residual_tol = 1e-9;
  /// ... and the ansatz coefficient vector is longer than this.
  double torsion_min = 1e-6;
  /// Distance to the parametrized solution set counted as a match.
  double match_tol = 1e-6;
  int als_iterations = 60;
  int newton_iterations = 80;
};

struct SearchCandidate {
  int start = 0;
  std::array<double, 11> c{};
  /// Unit spinor, sign fixed so the largest-magnitude entry is positive.
  std::array<double, 8> psi{};
  double residual = 0.0;
  double torsion_norm = 0.0;
  /// Label of the known solution it matches, if any.
  std::optional<std::string> match;
  double match_distance = 0.0;
};

struct SearchResult {
  int starts = 0;
  /// Starts whose polished point met the residual threshold (any torsion).
  int converged = 0;
  /// Converged with torsion below torsion_min (Levi-Civita parallel spinors).
  int trivial = 0;
  std::vector<SearchCandidate> candidates;
};

/// The bilinear system (L + sum_k c_k N_k) psi = 0 of the torsion connection
/// restricted to the 11-term ansatz, as 56x8 blocks in double precision.
struct BilinearSystem {
  std::array<double, 56 * 8> lift{};
  std::array<std::array<double, 56 * 8>, 11> torsion{};

  static BilinearSystem from_connection(const FrameConnection& c, const ConventionConstants& k = {});
};

/// One random start: alternating least squares, then damped Newton.
/// Deterministic in (seed, start).
SearchCandidate search_start(const BilinearSystem& sys, const SearchConfig& cfg, int start);

/// Reference implementation, one start after another.
SearchResult numeric_search_serial(const BilinearSystem& sys, const SearchConfig& cfg);

/// Same result as the serial version; starts run in parallel when built
/// with OpenMP. Candidates are ordered by residual, then coefficients.
SearchResult numeric_search(const BilinearSystem& sys, const SearchConfig& cfg);

SearchResult numeric_search(std::string_view example, const SearchConfig& cfg);

/// Distance of a candidate from the family and isolated solutions on
/// example (2); returns the closest label.
std::pair<std::string, double> nearest_known_solution(const SearchCandidate& c);

}  // namespace g2solv
