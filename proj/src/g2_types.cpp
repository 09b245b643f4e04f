#include "g2solv/g2_types.hpp"

#include <array>

#include "g2solv/fixtures.hpp"
#include "g2solv/solver.hpp"

namespace g2solv {

namespace {

using F = KForm<Rational>;

const std::array<IndexMask, 21>& two_form_basis() {
  static const std::array<IndexMask, 21> basis = [] {
    std::array<IndexMask, 21> b{};
    std::size_t n = 0;
    for (int i = 1; i <= kDim; ++i)
      for (int j = i + 1; j <= kDim; ++j) b[n++] = static_cast<IndexMask>((1u << (i - 1)) | (1u << (j - 1)));
    return b;
  }();
  return basis;
}

const std::array<IndexMask, 7>& one_form_basis() {
  static const std::array<IndexMask, 7> basis = {1, 2, 4, 8, 16, 32, 64};
  return basis;
}

bool all_zero(const F& f) { return f.is_zero(); }

}  // namespace

std::string to_string(TorsionClass c) {
  switch (c) {
    case TorsionClass::T1: return "T1";
    case TorsionClass::T2: return "T2";
    case TorsionClass::T3: return "T3";
    case TorsionClass::T4: return "T4";
  }
  return "?";
}

int induced_orientation(const F& phi) {
  if (phi.is_zero() || phi.degree() != 3) return 0;
  const F a = interior(1, phi);
  if (a.is_zero()) return 0;
  const Rational v = wedge(wedge(a, a), phi).coeff(kVolumeMask);
  return v.is_zero() ? 0 : (v > Rational(0) ? 1 : -1);
}

Matrix<Rational> lambda2_operator(const F& phi) {
  const Rational sign(induced_orientation(phi));
  const auto& basis = two_form_basis();
  Matrix<Rational> a(21, 21);
  for (std::size_t col = 0; col < 21; ++col) {
    const F img = hodge(wedge(phi, F::from_mask(basis[col]))) * sign;
    for (std::size_t row = 0; row < 21; ++row) a(row, col) = img.coeff(basis[row]);
  }
  return a;
}

bool is_g2_form(const F& phi) {
  if (phi.is_zero() || phi.degree() != 3) return false;
  const Rational q = inner(phi, phi) / Rational(7);
  if (q.is_zero()) return false;
  const Matrix<Rational> a = lambda2_operator(phi);
  const Matrix<Rational> a2 = a * a;
  const Matrix<Rational> shifted = a2 - Matrix<Rational>::identity(21) * (Rational(2) * q);
  return shifted * shifted == a2 * q;
}

G2TorsionReport tau_extract(const FrameConnection& c, const F& phi) {
  if (!is_g2_form(phi)) throw InvalidInput("tau_extract: phi is not a G2 form for the frame metric");
  G2TorsionReport r;
  const F star_phi = hodge(phi);
  r.norm_sq = inner(phi, phi);
  r.d_phi = d_form(c, phi);
  r.delta_phi = delta_form(c, phi);

  r.tau1 = r.d_phi.is_zero() ? Rational(0) : inner(r.d_phi, star_phi) / r.norm_sq;
  r.tau4 = F(1);
  if (!r.d_phi.is_zero()) r.tau4 = hodge(wedge(hodge(r.d_phi), phi)) * (Rational(-7, 12) / r.norm_sq);
  r.tau3_star = r.d_phi - star_phi * r.tau1 - wedge(r.tau4, phi) * Rational(3);

  // tau2: 21 unknowns, 21 equations *(beta ^ phi) = rhs and 7 equations
  // beta ^ *phi = 0 cutting out Lambda^2_14.
  F rhs = r.delta_phi;
  if (!r.tau4.is_zero()) rhs += hodge(wedge(r.tau4, star_phi)) * Rational(4);
  const auto& b2 = two_form_basis();
  Matrix<Rational> sys(28, 21);
  Vector<Rational> target(28, Rational(0));
  for (std::size_t col = 0; col < 21; ++col) {
    const F beta = F::from_mask(b2[col]);
    const F img = hodge(wedge(beta, phi));
    for (std::size_t row = 0; row < 21; ++row) sys(row, col) = img.coeff(b2[row]);
    const F six = hodge(wedge(beta, star_phi));
    for (std::size_t row = 0; row < 7; ++row) sys(21 + row, col) = six.coeff(one_form_basis()[row]);
  }
  for (std::size_t row = 0; row < 21; ++row) target[row] = rhs.coeff(b2[row]);
  const auto sol = solve_linear(sys, std::span<const Rational>(target));
  r.tau2 = F(2);
  if (sol.status == LinearSolution<Rational>::Status::inconsistent) {
    r.consistent = false;
    r.diagnostic = "tau2 system *(tau2 ^ phi) = delta phi + 4 *(tau4 ^ *phi) has no solution in Lambda^2_14";
  } else {
    for (std::size_t i = 0; i < 21; ++i) r.tau2.add_term(b2[i], sol.particular[i]);
  }

  if (!r.tau1.is_zero()) r.class_label.insert(TorsionClass::T1);
  if (!all_zero(r.tau2)) r.class_label.insert(TorsionClass::T2);
  if (!all_zero(r.tau3_star)) r.class_label.insert(TorsionClass::T3);
  if (!all_zero(r.tau4)) r.class_label.insert(TorsionClass::T4);
  return r;
}

bool reconstruction_holds(const G2TorsionReport& r, const F& phi) {
  if (!r.consistent) return false;
  const F star_phi = hodge(phi);
  F d = star_phi * r.tau1 + r.tau3_star;
  if (!r.tau4.is_zero()) d += wedge(r.tau4, phi) * Rational(3);
  F delta = F(2);
  if (!r.tau4.is_zero()) delta += hodge(wedge(r.tau4, star_phi)) * Rational(-4);
  if (!r.tau2.is_zero()) delta += hodge(wedge(r.tau2, phi));
  return d == r.d_phi && delta == r.delta_phi;
}

std::string classify(const G2TorsionReport& r) {
  if (r.class_label.empty()) return "integrable";
  static const std::array<std::pair<TorsionClass, const char*>, 4> names = {{
      {TorsionClass::T1, "R"},
      {TorsionClass::T2, "g₂"},
      {TorsionClass::T3, "S²₀(R⁷)"},
      {TorsionClass::T4, "R⁷"},
  }};
  std::string out;
  for (const auto& [cls, name] : names) {
    if (!r.class_label.contains(cls)) continue;
    if (!out.empty()) out += " ⊕ ";
    out += name;
  }
  return out;
}

bool is_cosymplectic(const FrameConnection& c, const F& phi) { return d_form(c, hodge(phi)).is_zero(); }

std::vector<FamilyScanEntry> family_scan(const std::vector<std::pair<Rational, Rational>>& rs_pairs) {
  std::vector<FamilyScanEntry> out;
  out.reserve(rs_pairs.size());
  for (const auto& [r, s] : rs_pairs) {
    if (r.is_zero() && s.is_zero()) throw InvalidInput("family_scan: (r,s) = (0,0)");
    FamilyScanEntry e{r, s, family_lambda(r, s), family_mu(r, s)};
    const Rational m1 = e.mu - Rational(1);
    e.on_ellipse = m1 * m1 + Rational(4) * e.lambda * e.lambda == Rational(1);
    e.scale_invariant = true;
    for (const Rational& k : {Rational(2), Rational(-3), Rational(1, 2)})
      e.scale_invariant = e.scale_invariant && family_lambda(k * r, k * s) == e.lambda && family_mu(k * r, k * s) == e.mu;
    out.push_back(e);
  }
  return out;
}

Rational printed_family_tau1(const Rational& r, const Rational& s, const Rational& m) {
  return Rational(-3, 10) * m * (r * r - s * s) * (Rational(2) * r * r + Rational(2) * s * s - r * s);
}

FrameConnection pre_conformal_connection(int example, const Rational& m) {
  return koszul(load_fixture("example" + std::to_string(example)).extended(m));
}

}  // namespace g2solv
