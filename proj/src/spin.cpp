#include "g2solv/spin.hpp"

#include <sstream>

namespace g2solv {

Matrix<Rational> spin_generator(int a, int b) {
  if (a < 1 || a > 8 || b < 1 || b > 8 || a == b) throw InvalidInput("E_ab needs distinct indices in 1..8");
  Matrix<Rational> m(kSpinorDim, kSpinorDim);
  const auto ua = static_cast<std::size_t>(a - 1);
  const auto ub = static_cast<std::size_t>(b - 1);
  m(ub, ua) = Rational(1);
  m(ua, ub) = Rational(-1);
  return m;
}

namespace {

struct Gen {
  int sign;
  int a;
  int b;
};

Matrix<Rational> combine(std::initializer_list<Gen> gens) {
  Matrix<Rational> m(kSpinorDim, kSpinorDim);
  for (const Gen& g : gens) m += spin_generator(g.a, g.b) * Rational(g.sign);
  return m;
}

}  // namespace

const SpinRep& SpinRep::standard() {
  static const SpinRep rep(SpinOperators<Rational>{
      combine({{1, 1, 8}, {1, 2, 7}, {-1, 3, 6}, {-1, 4, 5}}),
      combine({{-1, 1, 7}, {1, 2, 8}, {1, 3, 5}, {-1, 4, 6}}),
      combine({{-1, 1, 6}, {1, 2, 5}, {-1, 3, 8}, {1, 4, 7}}),
      combine({{-1, 1, 5}, {-1, 2, 6}, {-1, 3, 7}, {-1, 4, 8}}),
      combine({{-1, 1, 3}, {-1, 2, 4}, {1, 5, 7}, {1, 6, 8}}),
      combine({{1, 1, 4}, {-1, 2, 3}, {-1, 5, 8}, {1, 6, 7}}),
      combine({{1, 1, 2}, {-1, 3, 4}, {-1, 5, 6}, {1, 7, 8}}),
  });
  return rep;
}

const Matrix<Rational>& SpinRep::operator[](int i) const {
  if (i < 1 || i > kDim) throw InvalidInput("Clifford generator index out of range 1..7");
  return gamma_[static_cast<std::size_t>(i - 1)];
}

SpinRep SpinRep::with_flipped_sign(int i) const {
  SpinRep out = *this;
  out.gamma_[static_cast<std::size_t>(i - 1)] = -(*this)[i];
  return out;
}

int SpinRep::clifford_violations() const {
  int bad = 0;
  const Matrix<Rational> id = Matrix<Rational>::identity(kSpinorDim);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i; j <= kDim; ++j) {
      const Matrix<Rational> anti = (*this)[i] * (*this)[j] + (*this)[j] * (*this)[i];
      const Matrix<Rational> expected = i == j ? id * Rational(-2) : Matrix<Rational>(kSpinorDim, kSpinorDim);
      if (!(anti == expected)) ++bad;
    }
  }
  return bad;
}

KForm<Rational> phi_from_spinor(const Spinor<Rational>& psi, const SpinRep& rep) {
  if (psi.size() != kSpinorDim) throw InvalidInput("spinor must have 8 components");
  if (std::all_of(psi.begin(), psi.end(), [](const Rational& x) { return x.is_zero(); }))
    throw InvalidInput("phi_from_spinor: zero spinor");
  KForm<Rational> phi(3);
  const Rational quarter(1, 4);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      for (int k = j + 1; k <= kDim; ++k) {
        const Matrix<Rational> ijk = rep[i] * rep[j] * rep[k];
        const Spinor<Rational> v = ijk.apply(std::span<const Rational>(psi));
        phi += KForm<Rational>::monomial({i, j, k}, quarter * spinor_dot(v, psi));
      }
    }
  }
  return phi;
}

SpinOperators<Rational> spin_lift(const FrameConnection& c, const ConventionConstants& k, const SpinRep& rep) {
  SpinOperators<Rational> out;
  for (int i = 1; i <= kDim; ++i) {
    Matrix<Rational> m(kSpinorDim, kSpinorDim);
    for (int j = 1; j <= kDim; ++j)
      for (int l = j + 1; l <= kDim; ++l)
        if (!c(i, j, l).is_zero()) m += rep[j] * rep[l] * c(i, j, l);
    out[static_cast<std::size_t>(i - 1)] = m * k.lc_factor;
  }
  return out;
}

const std::vector<Rational>& calibration_grid() {
  static const std::vector<Rational> grid = {Rational(1),     Rational(-1),    Rational(1, 2),
                                             Rational(-1, 2), Rational(1, 4), Rational(-1, 4)};
  return grid;
}

bool lift_is_equivariant(const Rational& lc_factor, const SpinRep& rep) {
  for (int a = 1; a <= kDim; ++a) {
    for (int b = a + 1; b <= kDim; ++b) {
      // A = E_ab on R^7: A e_a = e_b, A e_b = -e_a.
      const Matrix<Rational> lift = rep[a] * rep[b] * lc_factor;
      for (int v = 1; v <= kDim; ++v) {
        const Matrix<Rational> comm = lift * rep[v] - rep[v] * lift;
        Matrix<Rational> expected(kSpinorDim, kSpinorDim);
        if (v == a) expected = rep[b];
        if (v == b) expected = -rep[a];
        if (!(comm == expected)) return false;
      }
    }
  }
  return true;
}

namespace {

bool annihilates(const SpinOperators<Rational>& ops, const Spinor<Rational>& psi) {
  for (const auto& m : ops)
    for (const auto& x : m.apply(std::span<const Rational>(psi)))
      if (!x.is_zero()) return false;
  return true;
}

std::string describe(const ConventionConstants& k) {
  std::ostringstream os;
  os << "(lc_factor " << k.lc_factor << ", kappa " << k.kappa << ")";
  return os.str();
}

}  // namespace

CalibrationReport calibrate_conventions(const CalibrationInputs& in) {
  CalibrationReport rep;
  const SpinRep& spin = *in.rep;
  for (const Rational& lc : calibration_grid()) {
    for (const Rational& kappa : calibration_grid()) {
      ++rep.pairs_tried;
      const ConventionConstants k{lc, kappa};
      if (!annihilates(spin_lift(in.connection, k, spin), in.lc_spinor)) continue;
      if (!annihilates(torsion_connection(in.connection, in.torsion, k, spin), in.torsion_spinor)) continue;
      rep.anchor_passing.push_back(k);
      if (lift_is_equivariant(lc, spin)) rep.equivariant_passing.push_back(k);
    }
  }
  if (rep.anchor_passing.empty())
    throw VerificationFailure("calibration: no (lc_factor, kappa) pair passes both anchors; check the "
                              "representation matrices and the fixture data");
  if (rep.equivariant_passing.size() != 1) {
    std::ostringstream os;
    os << "calibration: " << rep.equivariant_passing.size() << " equivariant pairs among "
       << rep.anchor_passing.size() << " anchor-passing pairs";
    for (const auto& k : rep.anchor_passing) os << ' ' << describe(k);
    throw VerificationFailure(os.str());
  }
  rep.selected = rep.equivariant_passing.front();
  for (std::size_t a = 0; a < in.audit.size(); ++a) {
    const auto& [T, psi] = in.audit[a];
    if (!annihilates(torsion_connection(in.connection, T, *rep.selected, spin), psi)) rep.audit_failures.push_back(a);
  }
  return rep;
}

}  // namespace g2solv
