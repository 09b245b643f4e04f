#include "g2solv/solver.hpp"

#include "g2solv/standard_forms.hpp"

namespace g2solv {

namespace {

using F = KForm<Rational>;
using forms::e;

IndexMask mask_of(std::initializer_list<int> idx) { return KForm<Rational>::monomial(idx).terms().begin()->first; }

KForm<QuadExt> lift_form(const F& f) {
  return f.map_coeffs([](const Rational& x) { return QuadExt(x); });
}

void check_sign(int eps) {
  if (eps != 1 && eps != -1) throw InvalidInput("eps must be +1 or -1");
}

std::string sign_label(int eps) { return eps > 0 ? "+" : "-"; }

}  // namespace

const std::array<IndexMask, 11>& ansatz_monomials() {
  static const std::array<IndexMask, 11> m = {
      mask_of({1, 2, 5}), mask_of({1, 3, 6}), mask_of({2, 4, 6}), mask_of({3, 4, 5}),
      mask_of({1, 2, 6}), mask_of({3, 4, 6}), mask_of({1, 3, 5}), mask_of({2, 4, 5}),
      mask_of({1, 4, 7}), mask_of({5, 6, 7}), mask_of({2, 3, 7})};
  return m;
}

const std::array<std::string, 11>& ansatz_names() {
  static const std::array<std::string, 11> n = {"c125", "c136", "c246", "c345", "c126", "c346",
                                                "c135", "c245", "c147", "c567", "c237"};
  return n;
}

std::string to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::A: return "A";
    case ReductionCase::B_plus: return "B(eps=+1)";
    case ReductionCase::B_minus: return "B(eps=-1)";
    case ReductionCase::C: return "C";
    case ReductionCase::D_plus: return "D(eps=+1)";
    case ReductionCase::D_minus: return "D(eps=-1)";
  }
  return "?";
}

Rational family_lambda(const Rational& r, const Rational& s) {
  const Rational q = r * r + s * s;
  if (q.is_zero()) throw InvalidInput("(r, s) must not be (0, 0)");
  return (r * r - s * s) / (Rational(2) * q);
}

Rational family_mu(const Rational& r, const Rational& s) {
  const Rational q = r * r + s * s;
  if (q.is_zero()) throw InvalidInput("(r, s) must not be (0, 0)");
  return (r - s) * (r - s) / q;
}

Spinor<Rational> family_spinor(const Rational& r, const Rational& s) { return {0, 0, 0, 0, r, s, -r, s}; }

KForm<Rational> family_torsion(const Rational& r, const Rational& s, const Rational& m) {
  const F bracket = family_lambda(r, s) * (forms::eta_plus() - Rational(6) * e({1, 2, 5})) +
                    family_mu(r, s) * (forms::eta_minus() + Rational(3) * e({3, 4, 6}));
  return Rational(-1, 10) * m * bracket;
}

KForm<Rational> family_phi(const Rational& r, const Rational& s) {
  return r * s * forms::eta_plus() + Rational(1, 2) * (s * s - r * r) * forms::eta_minus() +
         Rational(1, 2) * (s * s + r * r) * wedge(forms::omega(), forms::e7());
}

SolutionRecord<Rational> family_solution(const Rational& r, const Rational& s) {
  SolutionRecord<Rational> rec;
  rec.label = "family(" + r.to_compact_string() + "," + s.to_compact_string() + ")";
  rec.T = family_torsion(r, s);
  rec.psi = family_spinor(r, s);
  rec.scalar_field = "rational";
  rec.constraint = "c147 = c237 = c567 = 0";
  const ParallelCheck chk = verify_parallel(printed_connection(2), rec.T, rec.psi);
  if (!chk.parallel)
    throw VerificationFailure(rec.label + " is not parallel in direction " + std::to_string(*chk.failing_direction));
  return rec;
}

Spinor<Rational> isolated_spinor(int i, int eps) {
  check_sign(eps);
  const bool plus = eps > 0;
  switch (i) {
    case 1: return plus ? Spinor<Rational>{0, 1, 0, -1, 0, 0, 0, 0} : Spinor<Rational>{1, 0, 1, 0, 0, 0, 0, 0};
    case 2: return plus ? Spinor<Rational>{0, 1, 0, 1, 0, 0, 0, 0} : Spinor<Rational>{1, 0, -1, 0, 0, 0, 0, 0};
    case 3: return plus ? Spinor<Rational>{0, 0, 0, 0, 1, 0, 1, 0} : Spinor<Rational>{0, 0, 0, 0, 0, 1, 0, -1};
    default: throw InvalidInput("isolated solution index must be 1, 2 or 3");
  }
}

namespace {

// -(m/10) [ a (eta+ + X) + 1/3 (eta- + Y) + b (omega + Z) ^ e7 ].
F isolated_shape(const Rational& a, const F& x, const F& y, const Rational& b, const F& z, const Rational& m) {
  const F bracket = a * (forms::eta_plus() + x) + Rational(1, 3) * (forms::eta_minus() + y) +
                    b * wedge(forms::omega() + z, forms::e7());
  return Rational(-1, 10) * m * bracket;
}

}  // namespace

KForm<Rational> isolated_torsion(int i, int eps, const Rational& m) {
  check_sign(eps);
  const Rational half_eps(eps, 2);
  const Rational two_thirds_eps(2 * eps, 3);
  switch (i) {
    case 1:
      return isolated_shape(-half_eps, Rational(4) * e({1, 2, 5}) - Rational(2) * e({2, 4, 6}),
                            Rational(2) * e({1, 3, 5}) - e({3, 4, 6}), two_thirds_eps, -e({2, 3}), m);
    case 2:
      return isolated_shape(half_eps, Rational(4) * e({1, 2, 5}) - Rational(2) * e({1, 3, 6}),
                            Rational(2) * e({2, 4, 5}) - e({3, 4, 6}), -two_thirds_eps, e({1, 4}), m);
    case 3:
      return isolated_shape(half_eps, Rational(4) * e({1, 2, 5}) + Rational(2) * e({3, 4, 5}),
                            Rational(-2) * e({1, 2, 6}) - e({3, 4, 6}), -two_thirds_eps, e({5, 6}), m);
    default: throw InvalidInput("isolated solution index must be 1, 2 or 3");
  }
}

KForm<Rational> printed_isolated_torsion(int i, int eps, const Rational& m) {
  check_sign(eps);
  const Rational half_eps(eps, 2);
  const Rational two_thirds_eps(2 * eps, 3);
  switch (i) {
    case 1:
      return isolated_shape(half_eps, Rational(4) * e({1, 2, 5}) - Rational(2) * e({2, 4, 6}),
                            Rational(-2) * e({1, 3, 5}) - e({3, 4, 6}), -two_thirds_eps, -e({2, 3}), m);
    case 2: return isolated_torsion(2, eps, m);
    case 3:
      // Printed with 1/2 instead of eps/2 on the eta+ bracket.
      return isolated_shape(Rational(1, 2), Rational(4) * e({1, 2, 5}) + Rational(2) * e({3, 4, 5}),
                            Rational(-2) * e({1, 2, 6}) - e({3, 4, 6}), -two_thirds_eps, e({5, 6}), m);
    default: throw InvalidInput("isolated solution index must be 1, 2 or 3");
  }
}

KForm<Rational> printed_isolated_phi_doubled(int i, int eps) {
  check_sign(eps);
  const Rational s(eps);
  switch (i) {
    case 1: return s * parse_form("e126 + e135 - e245 + e346") + parse_form("-e147 - e567 - e237");
    case 2: return s * parse_form("-e126 + e135 - e245 - e346") + parse_form("e147 - e567 + e237");
    case 3: return s * parse_form("e126 + e135 + e245 - e346") + parse_form("-e147 + e567 + e237");
    default: throw InvalidInput("isolated solution index must be 1, 2 or 3");
  }
}

std::vector<SolutionRecord<Rational>> isolated_solutions() {
  static const char* kConstraints[3] = {"c147 = -c567 - c237", "c147 = c567 - c237", "c147 = c567 + c237"};
  const FrameConnection c = printed_connection(2);
  std::vector<SolutionRecord<Rational>> out;
  for (int i = 1; i <= 3; ++i) {
    for (int eps : {1, -1}) {
      SolutionRecord<Rational> rec;
      rec.label = "isolated T" + std::to_string(i) + sign_label(eps);
      rec.T = isolated_torsion(i, eps);
      rec.psi = isolated_spinor(i, eps);
      rec.scalar_field = "rational";
      rec.constraint = kConstraints[i - 1];
      const ParallelCheck chk = verify_parallel(c, rec.T, rec.psi);
      if (!chk.parallel)
        throw VerificationFailure(rec.label + " is not parallel in direction " +
                                  std::to_string(*chk.failing_direction));
      out.push_back(std::move(rec));
    }
  }
  return out;
}

KForm<QuadExt> printed_complex_torsion(char which, int eps) {
  check_sign(eps);
  F real;
  F imag;
  F imag7;
  switch (which) {
    case 'a':
      real = parse_form("-2*e126 + e135 - 4*e245 + e346");
      imag = parse_form("e125 + e136 + e246 + e345");
      imag7 = parse_form("-e147 - e567 + 2*e237");
      break;
    case 'b':
      real = parse_form("e126 - e135 + 4*e245 - 2*e346");
      imag = parse_form("-e125 + e136 + e246 - e345");
      imag7 = parse_form("-e147 + e567 + 2*e237");
      break;
    case 'c':
      real = parse_form("e126 - 2*e135 + 4*e245 - e346");
      imag = parse_form("e125 + e136 - e246 - e345");
      imag7 = parse_form("e147 - e567 + 2*e237");
      break;
    default: throw InvalidInput("complex solution case must be 'a', 'b' or 'c'");
  }
  const QuadExt alpha = QuadExt::alpha() * QuadExt(eps);
  return lift_form(Rational(2, 3) * real) + lift_form(imag) * alpha +
         lift_form(Rational(2, 3) * imag7) * alpha;
}

Spinor<QuadExt> complex_spinor(char which, int eps) {
  check_sign(eps);
  const QuadExt a = QuadExt::alpha() * QuadExt(eps);
  const QuadExt two_a = a * QuadExt(2);
  const QuadExt z(0);
  switch (which) {
    case 'a': return {QuadExt(1) + two_a, 3, QuadExt(1) + two_a, -3, z, z, z, z};
    case 'b': return {3, QuadExt(-1) + two_a, -3, QuadExt(-1) + two_a, z, z, z, z};
    case 'c': return {z, z, z, z, QuadExt(1) + two_a, 3, QuadExt(1) + two_a, -3};
    default: throw InvalidInput("complex solution case must be 'a', 'b' or 'c'");
  }
}

std::vector<SolutionRecord<QuadExt>> complex_solutions(const Rational& m) {
  const FrameConnection c = printed_connection(4);
  std::vector<SolutionRecord<QuadExt>> out;
  for (char which : {'a', 'b', 'c'}) {
    for (int eps : {1, -1}) {
      SolutionRecord<QuadExt> rec;
      rec.label = std::string("complex (") + which + ") eps=" + sign_label(eps) + "1";
      rec.T = printed_complex_torsion(which, eps) * QuadExt(Rational(-1, 10) * m);
      rec.psi = complex_spinor(which, eps);
      rec.scalar_field = "quad_ext";
      rec.example = 4;
      const auto t = TorsionAnsatz<QuadExt>::from_form(rec.T);
      const QuadExt c147 = t["c147"];
      const QuadExt c237 = t["c237"];
      const QuadExt c567 = t["c567"];
      if ((c147 + c237 - c567).is_zero()) rec.constraint = "c147 = -c237 + c567";
      else if ((c147 + c237 + c567).is_zero()) rec.constraint = "c147 = -c237 - c567";
      else if ((c147 - c237 - c567).is_zero()) rec.constraint = "c147 = c237 + c567";
      else if ((c147 - c237 + c567).is_zero()) rec.constraint = "c147 = c237 - c567";
      else rec.constraint = "none";
      const ParallelCheck chk = verify_parallel(c, rec.T, rec.psi);
      if (!chk.parallel)
        throw VerificationFailure(rec.label + " is not parallel in direction " +
                                  std::to_string(*chk.failing_direction));
      out.push_back(std::move(rec));
    }
  }
  return out;
}

CalibrationInputs default_calibration_inputs() {
  CalibrationInputs in;
  in.connection = printed_connection(2);
  in.lc_spinor = base_spinor();
  in.torsion = family_torsion(Rational(1), Rational(2));
  in.torsion_spinor = family_spinor(Rational(1), Rational(2));
  for (int i = 1; i <= 3; ++i)
    for (int eps : {1, -1}) in.audit.emplace_back(isolated_torsion(i, eps), isolated_spinor(i, eps));
  return in;
}

}  // namespace g2solv
