#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2solv/fixtures.hpp"
#include "g2solv/spin.hpp"

namespace g2solv {

/// The eleven simple 3-forms spanning the torsion ansatz, in the order
/// 125, 136, 246, 345, 126, 346, 135, 245, 147, 567, 237.
const std::array<IndexMask, 11>& ansatz_monomials();

/// Coefficient names "c125", ... in ansatz order.
const std::array<std::string, 11>& ansatz_names();

template <Field S>
struct TorsionAnsatz {
  std::array<S, 11> c{};

  TorsionAnsatz() { c.fill(FieldTraits<S>::zero()); }

  KForm<S> to_form() const {
    KForm<S> out(3);
    for (std::size_t i = 0; i < 11; ++i) out.add_term(ansatz_monomials()[i], c[i]);
    return out;
  }

  /// Throws InvalidInput if the form has a component outside the ansatz.
  static TorsionAnsatz from_form(const KForm<S>& f) {
    if (!f.is_zero() && f.degree() != 3) throw InvalidInput("torsion ansatz needs a 3-form");
    TorsionAnsatz out;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < 11; ++i) {
      out.c[i] = f.coeff(ansatz_monomials()[i]);
      if (!FieldTraits<S>::is_zero(out.c[i])) ++matched;
    }
    if (matched != f.size()) throw InvalidInput("3-form has components outside the 11-term ansatz");
    return out;
  }

  const S& operator[](std::string_view name) const {
    for (std::size_t i = 0; i < 11; ++i)
      if (ansatz_names()[i] == name) return c[i];
    throw InvalidInput("unknown ansatz coefficient " + std::string(name));
  }
};

/// Outcome of checking that all seven torsion-connection operators kill psi.
struct ParallelCheck {
  bool parallel = false;
  /// Largest entry magnitude of the seven residual vectors (0 when exact).
  double residual = 0.0;
  /// First direction i (1-based) whose operator does not annihilate psi.
  std::optional<int> failing_direction;
};

template <Field S>
ParallelCheck verify_parallel(const FrameConnection& c, const KForm<S>& T, const Spinor<S>& psi,
                              const ConventionConstants& k = {}) {
  if (psi.size() != kSpinorDim) throw InvalidInput("spinor must have 8 components");
  if (std::all_of(psi.begin(), psi.end(), [](const S& x) { return FieldTraits<S>::is_zero(x); }))
    throw InvalidInput("verify_parallel: zero spinor");
  const SpinOperators<S> ops = torsion_connection(c, T, k);
  ParallelCheck out;
  out.parallel = true;
  for (int i = 1; i <= kDim; ++i) {
    for (const S& x : ops[static_cast<std::size_t>(i - 1)].apply(std::span<const S>(psi))) {
      out.residual = std::max(out.residual, FieldTraits<S>::magnitude(x));
      if (!FieldTraits<S>::is_zero(x) && out.parallel) {
        out.parallel = false;
        out.failing_direction = i;
      }
    }
  }
  return out;
}

/// verify_parallel against the printed connection of an example fixture.
template <Field S>
ParallelCheck verify_parallel(std::string_view example, const KForm<S>& T, const Spinor<S>& psi,
                              const ConventionConstants& k = {}) {
  return verify_parallel(printed_connection(example_number(example)), T, psi, k);
}

template <Field S>
struct SolutionRecord {
  std::string label;
  KForm<S> T;
  Spinor<S> psi;
  std::string scalar_field;
  /// The relation among c147, c237, c567 the solution satisfies.
  std::string constraint;
  int example = 2;
};

enum class ReductionCase { A, B_plus, B_minus, C, D_plus, D_minus };

std::string to_string(ReductionCase c);

template <Field S>
struct ReductionResult {
  std::vector<Spinor<S>> kernel;
  std::vector<ReductionCase> cases;
};

/// Kernel of Clifford multiplication by c147 e14 + c237 e23 + c567 e56 and
/// the cases of the block-reduction statement whose relation holds:
///   (A) c567 = 0, c147 = -c237          (upper block)
///   (B) c147 = -c237 + eps c567          (upper block)
///   (C) c567 = 0, c147 = c237           (lower block)
///   (D) c147 = c237 + eps c567           (lower block)
template <ExactField S>
ReductionResult<S> reduction_kernel(const S& c147, const S& c237, const S& c567) {
  using FT = FieldTraits<S>;
  KForm<S> a(2);
  a.add_term(KForm<S>::monomial({1, 4}).terms().begin()->first, c147);
  a.add_term(KForm<S>::monomial({2, 3}).terms().begin()->first, c237);
  a.add_term(KForm<S>::monomial({5, 6}).terms().begin()->first, c567);
  ReductionResult<S> out;
  out.kernel = kernel(clifford_matrix(a));
  const bool c567_zero = FT::is_zero(c567);
  if (c567_zero && FT::is_zero(c147 + c237)) out.cases.push_back(ReductionCase::A);
  if (!c567_zero && FT::is_zero(c147 + c237 - c567)) out.cases.push_back(ReductionCase::B_plus);
  if (!c567_zero && FT::is_zero(c147 + c237 + c567)) out.cases.push_back(ReductionCase::B_minus);
  if (c567_zero && FT::is_zero(c147 - c237)) out.cases.push_back(ReductionCase::C);
  if (!c567_zero && FT::is_zero(c147 - c237 - c567)) out.cases.push_back(ReductionCase::D_plus);
  if (!c567_zero && FT::is_zero(c147 - c237 + c567)) out.cases.push_back(ReductionCase::D_minus);
  return out;
}

/// lambda = (r^2 - s^2) / (2 (r^2 + s^2)).
Rational family_lambda(const Rational& r, const Rational& s);
/// mu = (r - s)^2 / (r^2 + s^2).
Rational family_mu(const Rational& r, const Rational& s);

/// psi_{r,s} = (0,0,0,0,r,s,-r,s).
Spinor<Rational> family_spinor(const Rational& r, const Rational& s);

/// T_{r,s} = -(m/10) [lambda (eta+ - 6 e125) + mu (eta- + 3 e346)].
KForm<Rational> family_torsion(const Rational& r, const Rational& s, const Rational& m = Rational(1));

/// phi_{r,s} = rs eta+ + (s^2 - r^2)/2 eta- + (s^2 + r^2)/2 omega ^ e7.
KForm<Rational> family_phi(const Rational& r, const Rational& s);

/// Family record on example (2); throws VerificationFailure if it does not
/// verify.
SolutionRecord<Rational> family_solution(const Rational& r, const Rational& s);

/// Spinor psi^eps_i of the isolated solutions (i = 1, 2, 3; eps = +-1).
Spinor<Rational> isolated_spinor(int i, int eps);

/// Torsion T^eps_i, in the form that makes psi^eps_i parallel.
KForm<Rational> isolated_torsion(int i, int eps, const Rational& m = Rational(1));

/// T^eps_i transcribed literally from the text. Differs from
/// isolated_torsion for i = 1 (both signs) and for i = 3, eps = -1.
KForm<Rational> printed_isolated_torsion(int i, int eps, const Rational& m = Rational(1));

/// Characteristic form 2 phi^eps_i as printed.
KForm<Rational> printed_isolated_phi_doubled(int i, int eps);

/// Six records (i = 1,2,3; eps = +,-) on example (2); throws
/// VerificationFailure naming the failing direction if any does not verify.
std::vector<SolutionRecord<Rational>> isolated_solutions();

/// Torsion of case 'a', 'b' or 'c' on example (4) exactly as printed
/// (no overall factor).
KForm<QuadExt> printed_complex_torsion(char which, int eps);

/// Spinor of case 'a', 'b' or 'c'.
Spinor<QuadExt> complex_spinor(char which, int eps);

/// Six records over Q(i sqrt2) on example (4) with the overall factor
/// -m/10 that the real solutions carry.
std::vector<SolutionRecord<QuadExt>> complex_solutions(const Rational& m = Rational(1));

/// T(i,j) = sum_{m<n} T_imn T_jmn (bilinear, no conjugation).
template <Field S>
Matrix<S> torsion_contraction(const KForm<S>& T) {
  if (!T.is_zero() && T.degree() != 3) throw InvalidInput("torsion_contraction expects a 3-form");
  Matrix<S> out(kDim, kDim);
  for (int i = 1; i <= kDim; ++i) {
    const KForm<S> ti = interior(i, T);
    for (int j = 1; j <= kDim; ++j) out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = inner(ti, interior(j, T));
  }
  return out;
}

/// Calibration inputs from example (2): printed connection, Psi, T_{1,2}
/// and psi_{1,2}; the isolated solutions are attached as the audit set.
CalibrationInputs default_calibration_inputs();

}  // namespace g2solv
