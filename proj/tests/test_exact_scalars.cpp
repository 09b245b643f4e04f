#include <random>

#include "doctest.h"
#include "g2solv/scalar.hpp"

using namespace g2solv;

namespace {

Rational random_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return Rational(num(rng), den(rng));
}

QuadExt random_quad(std::mt19937_64& rng) { return QuadExt(random_rational(rng), random_rational(rng)); }

}  // namespace

TEST_CASE("Rational stays normalized") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a.to_string() == "-3/2");
  CHECK(Rational(4).to_string() == "4/1");
  CHECK(Rational(4).to_compact_string() == "4");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidInput);
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
}

TEST_CASE("Rational does not overflow") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(1000003, 999983);
  Rational y = x;
  for (int i = 0; i < 40; ++i) y /= Rational(1000003, 999983);
  CHECK(y == Rational(1));
}

TEST_CASE("QuadExt: alpha squared is -2") {
  CHECK(QuadExt::alpha() * QuadExt::alpha() == QuadExt(-2));
  CHECK(QuadExt(1, 2).conj() == QuadExt(1, -2));
}

TEST_CASE("QuadExt field axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    const QuadExt a = random_quad(rng);
    const QuadExt b = random_quad(rng);
    const QuadExt c = random_quad(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a * a.conj() == QuadExt(a.real() * a.real() + Rational(2) * a.alpha_part() * a.alpha_part()));
    if (!a.is_zero()) CHECK(a * a.inverse() == QuadExt(1));
  }
  CHECK_THROWS_AS(QuadExt(0).inverse(), std::domain_error);
}

TEST_CASE("kernel: trivial cases") {
  CHECK(kernel(Matrix<Rational>::identity(2)).empty());
  CHECK(kernel(Matrix<Rational>(3, 3)).size() == 3);
  CHECK(kernel(Matrix<double>::identity(2)).empty());
  CHECK(kernel(Matrix<double>(3, 3)).size() == 3);
}

TEST_CASE("kernel vectors are exact on random rational matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = static_cast<std::size_t>(dim(rng));
    const std::size_t c = static_cast<std::size_t>(dim(rng));
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, 3);
    const auto basis = kernel(m);
    CHECK(basis.size() + row_reduce(m).rank() == c);
    for (const auto& v : basis) {
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("kernel over QuadExt") {
  // [[1, alpha], [alpha, -2]] has rank 1: second row = alpha * first row.
  Matrix<QuadExt> m(2, 2);
  m(0, 0) = QuadExt(1);
  m(0, 1) = QuadExt::alpha();
  m(1, 0) = QuadExt::alpha();
  m(1, 1) = QuadExt(-2);
  const auto basis = kernel(m);
  REQUIRE(basis.size() == 1);
  for (const auto& x : m.apply(basis[0])) CHECK(x.is_zero());
}

TEST_CASE("runtime-typed kernel rejects mixed exact and double entries") {
  ScalarGrid mixed = {{Scalar(Rational(1)), Scalar(0.5)}};
  CHECK_THROWS_AS(kernel(mixed), InvalidInput);
  ScalarGrid promoted = {{Scalar(Rational(1)), Scalar(QuadExt::alpha())}};
  const KernelBasis kb = kernel(promoted);
  REQUIRE(std::holds_alternative<std::vector<Vector<QuadExt>>>(kb));
  CHECK(std::get<std::vector<Vector<QuadExt>>>(kb).size() == 1);
  ScalarGrid numeric = {{Scalar(1.0), Scalar(2.0)}, {Scalar(2.0), Scalar(4.0)}};
  const auto nb = std::get<std::vector<Vector<double>>>(kernel(numeric));
  REQUIRE(nb.size() == 1);
  CHECK(std::abs(nb[0][0] + 2 * nb[0][1]) < 1e-12);
}

TEST_CASE("solve_linear") {
  const Vector<Rational> v = {Rational(1, 2), Rational(-3), Rational(7, 5)};
  const auto id = solve_linear(Matrix<Rational>::identity(3), std::span<const Rational>(v));
  CHECK(id.status == LinearSolution<Rational>::Status::unique);
  CHECK(id.particular == v);

  const Vector<Rational> one = {Rational(1)};
  const auto bad = solve_linear(Matrix<Rational>(1, 1), std::span<const Rational>(one));
  CHECK(bad.status == LinearSolution<Rational>::Status::inconsistent);
  REQUIRE(bad.inconsistent_row.has_value());
  CHECK(*bad.inconsistent_row == 0);

  Matrix<Rational> under(1, 2);
  under(0, 0) = Rational(1);
  under(0, 1) = Rational(1);
  const Vector<Rational> two = {Rational(2)};
  const auto aff = solve_linear(under, std::span<const Rational>(two));
  CHECK(aff.status == LinearSolution<Rational>::Status::affine);
  CHECK(aff.kernel.size() == 1);
  CHECK(under.apply(aff.particular)[0] == Rational(2));
}
