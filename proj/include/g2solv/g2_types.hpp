#pragma once

#include <set>
#include <string>
#include <vector>

#include "g2solv/lie.hpp"

namespace g2solv {

enum class TorsionClass { T1, T2, T3, T4 };

std::string to_string(TorsionClass c);

/// Intrinsic torsion of a G2 3-form. tau3_star holds *tau3 (a 4-form).
struct G2TorsionReport {
  Rational tau1;
  KForm<Rational> tau2{2};
  KForm<Rational> tau3_star{4};
  KForm<Rational> tau4{1};
  std::set<TorsionClass> class_label;

  KForm<Rational> d_phi{4};
  KForm<Rational> delta_phi{2};
  Rational norm_sq;
  /// False when the tau2 system has no solution in Lambda^2_14.
  bool consistent = true;
  std::string diagnostic;
};

/// +1 or -1: sign of (x _| phi)^2 ^ phi against e1234567 (0 if degenerate).
int induced_orientation(const KForm<Rational>& phi);

/// beta -> *(phi ^ beta) on Lambda^2 in the basis e12, e13, ..., e67, with
/// the Hodge star of the orientation phi induces.
Matrix<Rational> lambda2_operator(const KForm<Rational>& phi);

/// G2 test on the metric: with A = lambda2_operator(phi) and q = |phi|^2/7,
/// A has eigenvalues 2k and -k (k^2 = q), i.e. (A^2 - 2q)^2 = q A^2 and A != 0.
bool is_g2_form(const KForm<Rational>& phi);

/// tau1 = <d phi, *phi>/|phi|^2, tau4 = -(7/12) *(*d phi ^ phi)/|phi|^2,
/// tau3_star = d phi - tau1 *phi - 3 tau4 ^ phi, tau2 solved on Lambda^2_14
/// (beta ^ *phi = 0) from *(tau2 ^ phi) = delta phi + 4 *(tau4 ^ *phi).
/// Throws InvalidInput if phi is not a G2 form for the frame metric.
G2TorsionReport tau_extract(const FrameConnection& c, const KForm<Rational>& phi);

/// Both identities d phi = tau1 *phi + 3 tau4 ^ phi + *tau3 and
/// delta phi = -4 *(tau4 ^ *phi) + *(tau2 ^ phi), exactly.
bool reconstruction_holds(const G2TorsionReport& r, const KForm<Rational>& phi);

/// "integrable", or the nonzero summands among R, g2, S^2_0(R^7), R^7
/// joined by " ⊕ ".
std::string classify(const G2TorsionReport& r);

/// d(*phi) = 0.
bool is_cosymplectic(const FrameConnection& c, const KForm<Rational>& phi);

struct FamilyScanEntry {
  Rational r, s;
  Rational lambda, mu;
  bool on_ellipse = false;
  bool scale_invariant = false;
};

/// lambda, mu per pair, the ellipse (mu - 1)^2 + 4 lambda^2 = 1 and
/// invariance under (r,s) -> (cr,cs) for c in {2, -3, 1/2}.
std::vector<FamilyScanEntry> family_scan(const std::vector<std::pair<Rational, Rational>>& rs_pairs);

/// The printed expression -(3m/10)(r^2 - s^2)(2r^2 + 2s^2 - rs).
Rational printed_family_tau1(const Rational& r, const Rational& s, const Rational& m = Rational(1));

/// Levi-Civita connection of the extended example before the conformal
/// change (metric g rather than g~).
FrameConnection pre_conformal_connection(int example, const Rational& m = Rational(1));

}  // namespace g2solv
