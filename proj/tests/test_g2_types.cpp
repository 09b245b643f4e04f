#include "doctest.h"
#include "g2solv/g2_types.hpp"
#include "g2solv/solver.hpp"
#include "g2solv/standard_forms.hpp"

using namespace g2solv;

namespace {

using F = KForm<Rational>;

std::vector<Rational> grid_values() { return {-3, -2, -1, 0, 1, 2, 3}; }

}  // namespace

TEST_CASE("Lambda^2 operator on the base phi has eigenvalues 2 and -1") {
  const Matrix<Rational> a = lambda2_operator(forms::base_phi());
  const Matrix<Rational> id = Matrix<Rational>::identity(21);
  CHECK(kernel(a - id * Rational(2)).size() == 7);
  CHECK(kernel(a + id).size() == 14);
  // phi induces the orientation opposite to e1234567.
  CHECK(induced_orientation(forms::base_phi()) == -1);
  // The -1 eigenspace is Lambda^2_14 = {beta : beta ^ *phi = 0}.
  for (const auto& v : kernel(a + id)) {
    F beta(2);
    std::size_t n = 0;
    for (int i = 1; i <= kDim; ++i)
      for (int j = i + 1; j <= kDim; ++j) beta += F::monomial({i, j}, v[n++]);
    CHECK(wedge(beta, hodge(forms::base_phi())).is_zero());
  }
  CHECK(is_g2_form(forms::base_phi()));
  CHECK(is_g2_form(family_phi(1, 2)));
  CHECK_FALSE(is_g2_form(forms::eta_plus()));
  CHECK_FALSE(is_g2_form(forms::e({1, 2, 3})));
}

TEST_CASE("base phi: pure T4 on g, integrable on g~") {
  const G2TorsionReport pre = tau_extract(pre_conformal_connection(2), forms::base_phi());
  CHECK(reconstruction_holds(pre, forms::base_phi()));
  CHECK(pre.class_label == std::set<TorsionClass>{TorsionClass::T4});
  // Sign forced by d phi = -3 df ^ phi with df = +m e7.
  CHECK(pre.tau4 == -forms::e7());
  CHECK(classify(pre) == "R⁷");

  const G2TorsionReport post = tau_extract(printed_connection(2), forms::base_phi());
  CHECK(post.class_label.empty());
  CHECK(classify(post) == "integrable");
  CHECK(is_cosymplectic(printed_connection(2), forms::base_phi()));
}

TEST_CASE("family phi_{r,s} on the grid") {
  const FrameConnection c = printed_connection(2);
  for (const Rational& r : grid_values()) {
    for (const Rational& s : grid_values()) {
      if (r.is_zero() && s.is_zero()) continue;
      CAPTURE(r.to_string());
      CAPTURE(s.to_string());
      const F phi = family_phi(r, s);
      const G2TorsionReport rep = tau_extract(c, phi);
      CHECK(rep.consistent);
      CHECK(reconstruction_holds(rep, phi));
      CHECK(rep.tau2.is_zero());
      CHECK(rep.tau4 == forms::e7() * (family_mu(r, s) / Rational(10)));
      CHECK(rep.tau1 == Rational(-12, 35) * (r * r - s * s) / (r * r + s * s));
      CHECK(rep.delta_phi == forms::omega() * (Rational(-1, 5) * (r - s) * (r - s)));
      CHECK(rep.tau3_star.is_zero() == (r == s));
      if (r == -s) CHECK(rep.tau1.is_zero());
    }
  }
}

TEST_CASE("family classification") {
  const FrameConnection c = printed_connection(2);
  CHECK(classify(tau_extract(c, family_phi(1, 1))) == "integrable");
  const auto general = tau_extract(c, family_phi(1, 2));
  CHECK(general.class_label ==
        std::set<TorsionClass>{TorsionClass::T1, TorsionClass::T3, TorsionClass::T4});
  CHECK(classify(general) == "R ⊕ S²₀(R⁷) ⊕ R⁷");
  CHECK_FALSE(tau_extract(c, family_phi(1, -1)).class_label.contains(TorsionClass::T1));
}

TEST_CASE("the printed tau1 expression disagrees with the extraction off the diagonals") {
  // Both vanish at r = +-s; elsewhere they differ (recorded, not hidden).
  const FrameConnection c = printed_connection(2);
  CHECK(printed_family_tau1(1, 1).is_zero());
  CHECK(printed_family_tau1(1, -1).is_zero());
  CHECK(tau_extract(c, family_phi(1, 2)).tau1 == Rational(36, 175));
  CHECK(printed_family_tau1(1, 2) != Rational(36, 175));
}

TEST_CASE("isolated characteristic forms") {
  const FrameConnection c = printed_connection(2);
  for (int i = 1; i <= 3; ++i) {
    for (int eps : {1, -1}) {
      const F phi = phi_from_spinor(isolated_spinor(i, eps));
      const G2TorsionReport rep = tau_extract(c, phi);
      CHECK(reconstruction_holds(rep, phi));
      CHECK(rep.tau2.is_zero());
      CHECK(rep.tau4 == forms::e7() * Rational(1, 10));
      CHECK((rep.tau1 == Rational(4, 35) || rep.tau1 == Rational(-4, 35)));
      CHECK(classify(rep) == "R ⊕ S²₀(R⁷) ⊕ R⁷");
    }
  }
}

TEST_CASE("tau_extract rejects non-G2 forms") {
  CHECK_THROWS_AS(tau_extract(printed_connection(2), forms::eta_minus()), InvalidInput);
}

TEST_CASE("family scan and the ellipse") {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const Rational& r : grid_values())
    for (const Rational& s : grid_values())
      if (!(r.is_zero() && s.is_zero())) pairs.emplace_back(r, s);
  for (const auto& e : family_scan(pairs)) {
    CHECK(e.on_ellipse);
    CHECK(e.scale_invariant);
  }
  const auto some = family_scan({{1, 1}, {1, 0}, {1, 2}});
  CHECK(some[0].lambda.is_zero());
  CHECK(some[0].mu.is_zero());
  CHECK(some[1].lambda == Rational(1, 2));
  CHECK(some[1].mu == Rational(1));
  CHECK(some[2].lambda == Rational(-3, 10));
  CHECK(some[2].mu == Rational(1, 5));
  CHECK_THROWS_AS(family_scan({{0, 0}}), InvalidInput);
}
