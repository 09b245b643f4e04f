#pragma once

#include <iosfwd>
#include <string>

#include "g2solv/rational.hpp"

namespace g2solv {

/// Element a + b*alpha of Q(alpha) with alpha^2 = -2, i.e. alpha = i*sqrt(2).
///
/// Conjugation is complex conjugation (alpha -> -alpha), so the norm
/// a^2 + 2b^2 is positive on every nonzero element.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  /// The generator alpha = i*sqrt(2).
  static QuadExt alpha() { return QuadExt(Rational(0), Rational(1)); }

  const Rational& real() const { return a_; }
  /// Coefficient of alpha (not of i).
  const Rational& alpha_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conj() const { return QuadExt(a_, -b_); }
  /// a^2 + 2 b^2 = this * conj(this).
  Rational norm() const { return a_ * a_ + Rational(2) * b_ * b_; }
  QuadExt inverse() const;

  /// "a", "b*i√2" or "a + b*i√2" with compact rationals.
  std::string to_string() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(const QuadExt& a) { return QuadExt(-a.a_, -a.b_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

}  // namespace g2solv
