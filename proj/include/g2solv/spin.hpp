#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2solv/exterior.hpp"
#include "g2solv/lie.hpp"
#include "g2solv/matrix.hpp"

namespace g2solv {

inline constexpr std::size_t kSpinorDim = 8;

template <class S>
using Spinor = Vector<S>;

/// Seven 8x8 matrices, one per frame direction.
template <class S>
using SpinOperators = std::array<Matrix<S>, kDim>;

/// Real 8-dimensional spin representation of Cl(7), e_i acting by
/// skew-symmetric orthogonal matrices with e_i e_j + e_j e_i = -2 delta_ij.
class SpinRep {
 public:
  /// The representation written with the E_ab generators:
  ///   e1 = E18 + E27 - E36 - E45    e2 = -E17 + E28 + E35 - E46
  ///   e3 = -E16 + E25 - E38 + E47   e4 = -E15 - E26 - E37 - E48
  ///   e5 = -E13 - E24 + E57 + E68   e6 = E14 - E23 - E58 + E67
  ///   e7 = E12 - E34 - E56 + E78
  /// where E_ab sends u_a to u_b and u_b to -u_a.
  static const SpinRep& standard();

  explicit SpinRep(SpinOperators<Rational> gamma) : gamma_(std::move(gamma)) {}

  const Matrix<Rational>& operator[](int i) const;

  /// Copy with e_i replaced by -e_i (fault injection).
  SpinRep with_flipped_sign(int i) const;

  /// Number of violated identities among the 28 Clifford relations.
  int clifford_violations() const;

 private:
  SpinOperators<Rational> gamma_;
};

/// Matrix of the endomorphism E_ab of R^8 (1-based a, b).
Matrix<Rational> spin_generator(int a, int b);

/// Clifford multiplication by a form of degree 1..3; e_{i1..ik} acts as the
/// product e_{i1} ... e_{ik}.
template <Field S>
Matrix<S> clifford_matrix(const KForm<S>& a, const SpinRep& rep = SpinRep::standard()) {
  if (a.degree() > 3) throw InvalidInput("Clifford action is only provided for degrees up to 3");
  Matrix<S> out(kSpinorDim, kSpinorDim);
  for (const auto& [mask, c] : a.terms()) {
    Matrix<Rational> prod = Matrix<Rational>::identity(kSpinorDim);
    for (int i : mask_indices(mask)) prod = prod * rep[i];
    out += prod.map([](const Rational& x) { return embed<S>(x); }) * c;
  }
  return out;
}

template <Field S>
Spinor<S> clifford_action(const KForm<S>& a, const Spinor<S>& psi, const SpinRep& rep = SpinRep::standard()) {
  if (a.degree() < 1) throw InvalidInput("Clifford action expects a form of degree 1, 2 or 3");
  if (psi.size() != kSpinorDim) throw InvalidInput("spinor must have 8 components");
  return clifford_matrix(a, rep).apply(std::span<const S>(psi));
}

/// Bilinear pairing sum psi_a chi_a.
template <Field S>
S spinor_dot(const Spinor<S>& a, const Spinor<S>& b) {
  S acc = FieldTraits<S>::zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// Conjugate-linear pairing sum conj(psi_a) chi_a (equals spinor_dot over Q).
template <Field S>
S spinor_hermitian(const Spinor<S>& a, const Spinor<S>& b) {
  S acc = FieldTraits<S>::zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc += FieldTraits<S>::conj(a[i]) * b[i];
  return acc;
}

/// phi_ijk = 1/4 <e_i e_j e_k psi, psi> over i < j < k.
KForm<Rational> phi_from_spinor(const Spinor<Rational>& psi, const SpinRep& rep = SpinRep::standard());

/// Normalizations the spin lift and the torsion term are written with.
struct ConventionConstants {
  Rational lc_factor{1, 2};
  Rational kappa{1};
  friend bool operator==(const ConventionConstants&, const ConventionConstants&) = default;
};

/// lift[i] = lc_factor * sum_{j<k} gamma(i,j,k) e_j e_k.
SpinOperators<Rational> spin_lift(const FrameConnection& c, const ConventionConstants& k = {},
                                  const SpinRep& rep = SpinRep::standard());

/// lift[i] + kappa * (e_i _| T).
template <Field S>
SpinOperators<S> torsion_connection(const FrameConnection& c, const KForm<S>& T, const ConventionConstants& k = {},
                                    const SpinRep& rep = SpinRep::standard()) {
  if (!T.is_zero() && T.degree() != 3) throw InvalidInput("torsion must be a 3-form");
  const SpinOperators<Rational> lift = spin_lift(c, k, rep);
  SpinOperators<S> out;
  const S kappa = embed<S>(k.kappa);
  for (int i = 1; i <= kDim; ++i) {
    Matrix<S> m = lift[static_cast<std::size_t>(i - 1)].map([](const Rational& x) { return embed<S>(x); });
    if (!T.is_zero()) m += clifford_matrix(interior(i, T), rep) * kappa;
    out[static_cast<std::size_t>(i - 1)] = std::move(m);
  }
  return out;
}

/// Stacked 56x8 matrix of the seven operators.
template <Field S>
Matrix<S> stack_operators(const SpinOperators<S>& ops) {
  return Matrix<S>::vstack(std::span<const Matrix<S>>(ops.data(), ops.size()));
}

/// Basis of the joint kernel of the seven operators.
template <Field S>
std::vector<Spinor<S>> parallel_spinors(const SpinOperators<S>& ops) {
  return kernel(stack_operators(ops));
}

/// True if psi lies in the span of the basis.
template <ExactField S>
bool in_span(const std::vector<Spinor<S>>& basis, const Spinor<S>& psi) {
  Matrix<S> m(kSpinorDim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < kSpinorDim; ++i) m(i, j) = basis[j][i];
  return solve_linear(m, std::span<const S>(psi)).consistent();
}

struct CalibrationInputs {
  FrameConnection connection;
  Spinor<Rational> lc_spinor;
  KForm<Rational> torsion;
  Spinor<Rational> torsion_spinor;
  const SpinRep* rep = &SpinRep::standard();
  /// Extra (T, psi) pairs the chosen constants must make parallel.
  std::vector<std::pair<KForm<Rational>, Spinor<Rational>>> audit;
};

struct CalibrationReport {
  /// Pairs passing both anchors: (i) the LC spinor is parallel, (ii) the
  /// torsion spinor is parallel for the torsion connection.
  std::vector<ConventionConstants> anchor_passing;
  /// Subset that also makes the lift equivariant: [lift(A), v.] = (Av).
  std::vector<ConventionConstants> equivariant_passing;
  std::optional<ConventionConstants> selected;
  /// Indices into CalibrationInputs::audit that fail with the selection.
  std::vector<std::size_t> audit_failures;
  int pairs_tried = 0;

  bool anchors_unique() const { return anchor_passing.size() == 1; }
};

/// Candidate values tried for each constant: +-1, +-1/2, +-1/4.
const std::vector<Rational>& calibration_grid();

/// Exhaustive search over the 36 (lc_factor, kappa) pairs. Throws
/// VerificationFailure if no pair passes the anchors or if equivariance
/// does not single out exactly one of them.
CalibrationReport calibrate_conventions(const CalibrationInputs& in);

/// Whether [lift(E_ab), e_v .] = (E_ab e_v) . for all generators and v.
bool lift_is_equivariant(const Rational& lc_factor, const SpinRep& rep = SpinRep::standard());

}  // namespace g2solv
