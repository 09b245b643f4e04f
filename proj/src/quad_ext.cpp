#include "g2solv/quad_ext.hpp"

#include <ostream>
#include <stdexcept>

namespace g2solv {

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of zero in Q(i*sqrt2)");
  return QuadExt(a_ / n, -b_ / n);
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_compact_string();
  std::string imag = b_.to_compact_string() + "*i√2";
  if (a_.is_zero()) return imag;
  if (b_.sign() < 0) return a_.to_compact_string() + " - " + (-b_).to_compact_string() + "*i√2";
  return a_.to_compact_string() + " + " + imag;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  // (a + b alpha)(c + d alpha) = ac - 2bd + (ad + bc) alpha
  Rational a = a_ * o.a_ - Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

}  // namespace g2solv
