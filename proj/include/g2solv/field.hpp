#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "g2solv/errors.hpp"
#include "g2solv/quad_ext.hpp"
#include "g2solv/rational.hpp"

namespace g2solv {

/// Scalar-field capabilities used by the generic algebra. Exact fields get
/// exact zero tests; double gets tolerance-based rank decisions in the
/// algorithms that need them.
template <class S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static double magnitude(const Rational& x) { return std::abs(x.to_double()); }
  static Rational conj(const Rational& x) { return x; }
  static std::string str(const Rational& x) { return x.to_compact_string(); }
};

template <>
struct FieldTraits<QuadExt> {
  static constexpr bool exact = true;
  static constexpr const char* name = "quad_ext";
  static QuadExt zero() { return QuadExt(0); }
  static QuadExt one() { return QuadExt(1); }
  static bool is_zero(const QuadExt& x) { return x.is_zero(); }
  static double magnitude(const QuadExt& x) { return std::sqrt(x.norm().to_double()); }
  static QuadExt conj(const QuadExt& x) { return x.conj(); }
  static std::string str(const QuadExt& x) { return x.to_string(); }
};

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "double";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static double magnitude(double x) { return std::abs(x); }
  static double conj(double x) { return x; }
  static std::string str(double x) { return std::to_string(x); }
};

template <class S>
concept Field = requires(const S& a, const S& b) {
  { FieldTraits<S>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
};

template <class S>
concept ExactField = Field<S> && FieldTraits<S>::exact;

/// Lossless embedding between fields (Rational -> QuadExt, exact -> double).
template <class To, class From>
To embed(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, QuadExt> && std::is_same_v<From, Rational>) {
    return QuadExt(x);
  } else if constexpr (std::is_same_v<To, double> && std::is_same_v<From, Rational>) {
    return x.to_double();
  } else if constexpr (std::is_same_v<To, double> && std::is_same_v<From, QuadExt>) {
    if (!x.is_rational()) throw InvalidInput("cannot embed a non-real element of Q(i*sqrt2) into double");
    return x.real().to_double();
  } else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, QuadExt>) {
    if (!x.is_rational()) throw InvalidInput("element of Q(i*sqrt2) is not rational");
    return x.real();
  } else {
    static_assert(sizeof(To) == 0, "unsupported field embedding");
  }
}

}  // namespace g2solv
