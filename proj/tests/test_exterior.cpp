#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "g2solv/exterior.hpp"

using namespace g2solv;

namespace {

using F = KForm<Rational>;

F e(std::initializer_list<int> idx) { return F::monomial(idx); }

F random_form(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> num(-3, 3);
  F out(degree);
  for (unsigned m = 0; m < 128; ++m)
    if (mask_degree(static_cast<IndexMask>(m)) == degree) out.add_term(static_cast<IndexMask>(m), Rational(num(rng)));
  return out;
}

// Brute-force Hodge star: for each monomial, search the complement monomial
// c with e_I ^ e_c = vol and read the sign from the wedge itself.
F brute_hodge(const F& a) {
  F out(kDim - a.degree());
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> rest;
    for (int i = 1; i <= kDim; ++i)
      if (!(m & (1u << (i - 1)))) rest.push_back(i);
    const F w = wedge(F::from_mask(m), F::monomial(rest));
    out += F::monomial(rest, c * w.coeff(kVolumeMask));
  }
  return out;
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(e({1}), e({4})) == e({1, 4}));
  CHECK(wedge(e({1, 4}), e({1, 4})).is_zero());
  const F omega = e({1, 4}) - e({2, 3}) + e({5, 6});
  const F expected = Rational(2) * (-e({1, 2, 3, 4}) + e({1, 4, 5, 6}) - e({2, 3, 5, 6}));
  CHECK(wedge(omega, omega) == expected);
  CHECK(F::monomial({2, 1}) == -e({1, 2}));
}

TEST_CASE("wedge graded commutativity and associativity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const F a = random_form(rng, 2);
    const F b = random_form(rng, 3);
    const F c = random_form(rng, 1);
    CHECK(wedge(a, b) == wedge(b, a));
    CHECK(wedge(b, c) == -wedge(c, b));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("hodge examples") {
  CHECK(hodge(e({1, 2, 5})) == e({3, 4, 6, 7}));
  CHECK(hodge(e({1, 2, 6})) == -e({3, 4, 5, 7}));
  CHECK(hodge(volume_form<Rational>()) == F::constant(Rational(1)));
}

TEST_CASE("hodge agrees with brute force and is an involution") {
  for (unsigned m = 0; m < 128; ++m) {
    const F a = F::from_mask(static_cast<IndexMask>(m));
    CHECK(hodge(a) == brute_hodge(a));
    CHECK(hodge(hodge(a)) == a);
  }
}

TEST_CASE("a ^ *a = |a|^2 vol on random 2- and 3-forms") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const F a = random_form(rng, 2 + t % 2);
    CHECK(wedge(a, hodge(a)) == inner(a, a) * volume_form<Rational>());
    const F b = random_form(rng, a.degree());
    CHECK(hodge(wedge(a, hodge(b))) == F::constant(inner(a, b)));
  }
}

TEST_CASE("interior examples") {
  CHECK(interior(7, e({1, 4, 7})) == e({1, 4}));
  CHECK(interior(1, e({2, 3})).is_zero());
  CHECK(interior(1, e({1, 2, 5})) == e({2, 5}));
  CHECK(interior(3, e({3})) == F::constant(Rational(1)));
}

TEST_CASE("interior is an anticommuting antiderivation") {
  std::mt19937_64 rng(5);
  for (int x = 1; x <= kDim; ++x) {
    const F a = random_form(rng, 2);
    const F b = random_form(rng, 3);
    CHECK(interior(x, wedge(a, b)) == wedge(interior(x, a), b) + wedge(a, interior(x, b)));
    CHECK(interior(x, interior(x, b)).is_zero());
    for (int y = 1; y <= kDim; ++y) CHECK(interior(x, interior(y, b)) == -interior(y, interior(x, b)));
  }
}

TEST_CASE("inner product") {
  CHECK(inner(e({1, 2, 5}), e({1, 2, 5})) == Rational(1));
  CHECK(inner(e({1, 2, 5}), e({1, 3, 6})) == Rational(0));
  const F phi = parse_form("e147 - e237 + e567 + e125 + e136 + e246 - e345");
  CHECK(inner(phi, phi) == Rational(7));
  CHECK_THROWS_AS(inner(e({1, 2}), e({1, 2, 3})), InvalidInput);
}

TEST_CASE("form literal grammar") {
  const F f = parse_form("e125 - 3/5*e136");
  CHECK(f.coeff(e({1, 2, 5}).terms().begin()->first) == Rational(1));
  CHECK(f.coeff({1, 3, 6}) == Rational(-3, 5));
  CHECK(to_string(f) == "e125 - 3/5*e136");
  CHECK(parse_form("-e21") == e({1, 2}));
  CHECK(parse_form(" + 2 * e1 ") == Rational(2) * e({1}));
  CHECK(parse_form("0").is_zero());
  CHECK(to_string(parse_form("-e346 + e125")) == "e125 - e346");
  CHECK_THROWS_AS(parse_form("e11"), InvalidInput);
  CHECK_THROWS_AS(parse_form("e18"), InvalidInput);
  CHECK_THROWS_AS(parse_form("e12 + e123"), InvalidInput);
  CHECK_THROWS_AS(parse_form("e12 e34"), InvalidInput);
  CHECK_THROWS_AS(parse_form(""), InvalidInput);
  CHECK_THROWS_AS(parse_form("3/*e1"), InvalidInput);
}
