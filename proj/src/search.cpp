#include "g2solv/search.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "g2solv/fixtures.hpp"
#include "g2solv/solver.hpp"

namespace g2solv {

namespace {

using Mat56x8 = Eigen::Matrix<double, 56, 8>;
using Mat56x11 = Eigen::Matrix<double, 56, 11>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Vec11 = Eigen::Matrix<double, 11, 1>;
using Vec56 = Eigen::Matrix<double, 56, 1>;

Mat56x8 block(const std::array<double, 56 * 8>& a) {
  return Eigen::Map<const Eigen::Matrix<double, 56, 8, Eigen::RowMajor>>(a.data());
}

struct Blocks {
  Mat56x8 lift;
  std::array<Mat56x8, 11> torsion;

  explicit Blocks(const BilinearSystem& s) : lift(block(s.lift)) {
    for (std::size_t k = 0; k < 11; ++k) torsion[k] = block(s.torsion[k]);
  }

  Mat56x8 operator_for(const Vec11& c) const {
    Mat56x8 a = lift;
    for (int k = 0; k < 11; ++k) a += c[k] * torsion[static_cast<std::size_t>(k)];
    return a;
  }

  Mat56x11 coefficient_map(const Vec8& psi) const {
    Mat56x11 b;
    for (int k = 0; k < 11; ++k) b.col(k) = torsion[static_cast<std::size_t>(k)] * psi;
    return b;
  }
};

Vec8 smallest_singular_vector(const Mat56x8& a) {
  const Eigen::JacobiSVD<Mat56x8> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().col(7);
}

Vec11 best_coefficients(const Blocks& b, const Vec8& psi) {
  const Mat56x11 m = b.coefficient_map(psi);
  const Vec56 rhs = -(b.lift * psi);
  return m.completeOrthogonalDecomposition().solve(rhs);
}

double stacked_norm(const Blocks& b, const Vec11& c, const Vec8& psi) {
  const double n = psi.squaredNorm() - 1.0;
  return std::sqrt((b.operator_for(c) * psi).squaredNorm() + n * n);
}

/// Levenberg-Marquardt on F(c, psi) = [A(c) psi; |psi|^2 - 1].
void polish(const Blocks& b, Vec11& c, Vec8& psi, int iterations) {
  using Vec19 = Eigen::Matrix<double, 19, 1>;
  using Mat57x19 = Eigen::Matrix<double, 57, 19>;
  double damping = 1e-3;
  double f = stacked_norm(b, c, psi);
  for (int it = 0; it < iterations && f > 1e-15; ++it) {
    Mat57x19 j = Mat57x19::Zero();
    j.block<56, 11>(0, 0) = b.coefficient_map(psi);
    j.block<56, 8>(0, 11) = b.operator_for(c);
    j.block<1, 8>(56, 11) = 2.0 * psi.transpose();
    Eigen::Matrix<double, 57, 1> r;
    r.head<56>() = b.operator_for(c) * psi;
    r[56] = psi.squaredNorm() - 1.0;
    const Eigen::Matrix<double, 19, 19> jtj = j.transpose() * j;
    const Vec19 g = j.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      Eigen::Matrix<double, 19, 19> h = jtj;
      h.diagonal() += damping * (jtj.diagonal().array() + 1e-12).matrix();
      const Vec19 step = h.ldlt().solve(-g);
      const Vec11 c2 = c + step.head<11>();
      const Vec8 p2 = psi + step.tail<8>();
      const double f2 = stacked_norm(b, c2, p2);
      if (f2 < f) {
        c = c2;
        psi = p2;
        f = f2;
        damping = std::max(damping / 4, 1e-12);
        improved = true;
      } else {
        damping *= 8;
      }
    }
    if (!improved) break;
  }
}

std::mt19937_64 start_rng(std::uint64_t seed, int start) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start)};
  return std::mt19937_64(seq);
}

bool candidate_less(const SearchCandidate& a, const SearchCandidate& b) {
  if (a.residual != b.residual) return a.residual < b.residual;
  if (a.c != b.c) return a.c < b.c;
  if (a.psi != b.psi) return a.psi < b.psi;
  return a.start < b.start;
}

SearchResult collect(const std::vector<SearchCandidate>& per_start, const SearchConfig& cfg) {
  SearchResult out;
  out.starts = cfg.starts;
  for (const SearchCandidate& c : per_start) {
    if (c.residual >= cfg.residual_tol) continue;
    ++out.converged;
    if (c.torsion_norm <= cfg.torsion_min) {
      ++out.trivial;
      continue;
    }
    out.candidates.push_back(c);
  }
  std::sort(out.candidates.begin(), out.candidates.end(), candidate_less);
  return out;
}

void check_config(const SearchConfig& cfg) {
  if (cfg.starts < 1) throw InvalidInput("numeric_search: starts must be at least 1");
  if (!(cfg.residual_tol > 0) || !(cfg.torsion_min >= 0) || !(cfg.match_tol > 0))
    throw InvalidInput("numeric_search: thresholds must be positive");
}

std::array<double, 11> to_array(const Vec11& v) {
  std::array<double, 11> a{};
  for (int i = 0; i < 11; ++i) a[static_cast<std::size_t>(i)] = v[i];
  return a;
}

std::array<double, 8> to_array(const Vec8& v) {
  std::array<double, 8> a{};
  for (int i = 0; i < 8; ++i) a[static_cast<std::size_t>(i)] = v[i];
  return a;
}

std::array<double, 11> coefficients_of(const KForm<Rational>& t) {
  const TorsionAnsatz<Rational> a = TorsionAnsatz<Rational>::from_form(t);
  std::array<double, 11> out{};
  for (std::size_t i = 0; i < 11; ++i) out[i] = a.c[i].to_double();
  return out;
}

std::array<double, 8> unit(std::array<double, 8> v) {
  double n = 0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  for (double& x : v) x /= n;
  return v;
}

double distance(const SearchCandidate& cand, const std::array<double, 11>& c, const std::array<double, 8>& psi) {
  double dc = 0, dp = 0, dm = 0;
  for (std::size_t i = 0; i < 11; ++i) dc += (cand.c[i] - c[i]) * (cand.c[i] - c[i]);
  for (std::size_t i = 0; i < 8; ++i) {
    dp += (cand.psi[i] - psi[i]) * (cand.psi[i] - psi[i]);
    dm += (cand.psi[i] + psi[i]) * (cand.psi[i] + psi[i]);
  }
  return std::sqrt(dc) + std::sqrt(std::min(dp, dm));
}

}  // namespace

BilinearSystem BilinearSystem::from_connection(const FrameConnection& c, const ConventionConstants& k) {
  BilinearSystem s;
  const Matrix<Rational> lift = stack_operators(spin_lift(c, k));
  for (std::size_t r = 0; r < 56; ++r)
    for (std::size_t j = 0; j < 8; ++j) s.lift[r * 8 + j] = lift(r, j).to_double();
  for (std::size_t m = 0; m < 11; ++m) {
    const KForm<Rational> mono = KForm<Rational>::from_mask(ansatz_monomials()[m]);
    const Matrix<Rational> t = stack_operators(torsion_connection(c, mono, k)) - lift;
    for (std::size_t r = 0; r < 56; ++r)
      for (std::size_t j = 0; j < 8; ++j) s.torsion[m][r * 8 + j] = t(r, j).to_double();
  }
  return s;
}

SearchCandidate search_start(const BilinearSystem& sys, const SearchConfig& cfg, int start) {
  const Blocks b(sys);
  std::mt19937_64 rng = start_rng(cfg.seed, start);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec11 c;
  for (int i = 0; i < 11; ++i) c[i] = 0.3 * normal(rng);
  Vec8 psi;
  for (int i = 0; i < 8; ++i) psi[i] = normal(rng);
  psi.normalize();

  double prev = stacked_norm(b, c, psi);
  for (int it = 0; it < cfg.als_iterations; ++it) {
    psi = smallest_singular_vector(b.operator_for(c));
    c = best_coefficients(b, psi);
    const double f = stacked_norm(b, c, psi);
    if (f < 1e-13 || prev - f < 1e-12 * prev) {
      prev = f;
      break;
    }
    prev = f;
  }
  polish(b, c, psi, cfg.newton_iterations);
  psi.normalize();

  Eigen::Index big = 0;
  psi.cwiseAbs().maxCoeff(&big);
  if (psi[big] < 0) psi = -psi;

  SearchCandidate out;
  out.start = start;
  out.c = to_array(c);
  out.psi = to_array(psi);
  out.residual = (b.operator_for(c) * psi).cwiseAbs().maxCoeff();
  out.torsion_norm = c.norm();
  return out;
}

SearchResult numeric_search_serial(const BilinearSystem& sys, const SearchConfig& cfg) {
  check_config(cfg);
  std::vector<SearchCandidate> per_start(static_cast<std::size_t>(cfg.starts));
  for (int s = 0; s < cfg.starts; ++s) per_start[static_cast<std::size_t>(s)] = search_start(sys, cfg, s);
  return collect(per_start, cfg);
}

SearchResult numeric_search(const BilinearSystem& sys, const SearchConfig& cfg) {
  check_config(cfg);
  std::vector<SearchCandidate> per_start(static_cast<std::size_t>(cfg.starts));
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (int s = 0; s < cfg.starts; ++s) per_start[static_cast<std::size_t>(s)] = search_start(sys, cfg, s);
  return collect(per_start, cfg);
}

SearchResult numeric_search(std::string_view example, const SearchConfig& cfg) {
  SearchResult r = numeric_search(BilinearSystem::from_connection(printed_connection(example_number(example))), cfg);
  if (example_number(example) == 2) {
    for (SearchCandidate& c : r.candidates) {
      auto [label, d] = nearest_known_solution(c);
      c.match_distance = d;
      if (d < cfg.match_tol) c.match = label;
    }
  }
  return r;
}

std::pair<std::string, double> nearest_known_solution(const SearchCandidate& cand) {
  std::pair<std::string, double> best{"none", INFINITY};
  // Family: psi is a multiple of (0,0,0,0,r,s,-r,s).
  const double r = (cand.psi[4] - cand.psi[6]) / 2;
  const double s = (cand.psi[5] + cand.psi[7]) / 2;
  const double q = r * r + s * s;
  if (q > 1e-12) {
    const double lambda = (r * r - s * s) / (2 * q);
    const double mu = (r - s) * (r - s) / q;
    const std::array<double, 11> c = {lambda / 2,   -lambda / 10, -lambda / 10, lambda / 10, -mu / 10, -mu / 5,
                                      mu / 10,      mu / 10,      0,            0,           0};
    const double d = distance(cand, c, unit({0, 0, 0, 0, r, s, -r, s}));
    if (d < best.second) best = {"family", d};
  }
  for (int i = 1; i <= 3; ++i) {
    for (int eps : {1, -1}) {
      std::array<double, 8> psi{};
      const Spinor<Rational> p = isolated_spinor(i, eps);
      for (std::size_t k = 0; k < 8; ++k) psi[k] = p[k].to_double();
      const double d = distance(cand, coefficients_of(isolated_torsion(i, eps)), unit(psi));
      if (d < best.second) best = {"isolated " + std::to_string(i) + (eps > 0 ? "+" : "-"), d};
    }
  }
  return best;
}

}  // namespace g2solv
