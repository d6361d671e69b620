#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "fuchsian/error.hpp"
#include "fuchsian/exactfield.hpp"

using namespace fuchsian;

namespace {

// Smallest b >= 1 with 1 + d b^2 a perfect square, by direct search.
std::pair<std::int64_t, std::int64_t> brute_pell(std::int64_t d) {
  for (std::int64_t b = 1; b <= 1000000; ++b) {
    const std::int64_t s = 1 + d * b * b;
    auto a = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(s))));
    while (a * a > s) --a;
    while ((a + 1) * (a + 1) <= s) ++a;
    if (a * a == s) return {a, b};
  }
  return {0, 0};
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-20, 20), den(1, 7);
  return {num(rng), den(rng)};
}

TowerElement random_tower(std::mt19937_64& rng) {
  return {small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng)};
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK(a + Rational(1, 2) == Rational(-1));
  CHECK(a * Rational(2, 3) == Rational(-1));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational promotes past int64 and demotes back") {
  Rational big(INT64_MAX);
  const Rational sq = big * big;
  CHECK_FALSE(sq.to_int64().has_value());
  CHECK(sq.numerator() == BigInt(INT64_MAX) * BigInt(INT64_MAX));
  const Rational back = sq / big;
  CHECK(back.to_int64() == INT64_MAX);
  CHECK((sq - sq).is_zero());
  CHECK(Rational(INT64_MIN + 1) - Rational(1) == Rational(BigInt(INT64_MIN)));
  CHECK(Rational(BigInt(INT64_MIN)) * Rational(-1) == Rational(BigInt(INT64_MAX) + 1));
}

TEST_CASE("galois conjugate") {
  const QuadElement e(3, 2, 1);
  CHECK(galois_conjugate(e) == QuadElement(3, 2, -1));
  CHECK(e * galois_conjugate(e) == QuadElement(3, 1));
  CHECK(galois_conjugate(QuadElement(3, 5)) == QuadElement(3, 5));
  const QuadElement f(2, 3, 2);
  CHECK(f * galois_conjugate(f) == QuadElement(2, 1));
}

TEST_CASE("quadratic elements reject non square-free d") {
  CHECK_THROWS_AS(QuadElement(4, 1, 1), Error);
  CHECK_THROWS_AS(QuadElement(1, 1, 1), Error);
  CHECK(is_square_free(6));
  CHECK_FALSE(is_square_free(12));
}

TEST_CASE("pell fundamental unit") {
  CHECK(pell_fundamental_unit(3) == QuadElement(3, 2, 1));
  CHECK(pell_fundamental_unit(2) == QuadElement(2, 3, 2));
  CHECK(pell_fundamental_unit(6) == QuadElement(6, 5, 2));
  for (std::int64_t d : {2, 3, 5, 6, 7, 10}) {
    CAPTURE(d);
    const auto [a, b] = brute_pell(d);
    CHECK(pell_fundamental_unit(d) == QuadElement(d, a, b));
  }
  CHECK(pell_fundamental_unit(61) == QuadElement(61, Rational::parse("1766319049"), Rational::parse("226153980")));
  CHECK_THROWS_AS(pell_fundamental_unit(661, 16), Error);
  CHECK_THROWS_AS(pell_fundamental_unit(9), Error);
}

TEST_CASE("unit powers") {
  const QuadElement eps(3, 2, 1);
  CHECK(unit_power(eps, 2) == QuadElement(3, 7, 4));
  CHECK(unit_power(eps, 0) == QuadElement(3, 1));
  CHECK(unit_power(eps, -1) == QuadElement(3, 2, -1));
  for (int m = -30; m <= 30; m += 3)
    for (int n = -30; n <= 30; n += 7) CHECK(unit_power(eps, m) * unit_power(eps, n) == unit_power(eps, m + n));
  CHECK_THROWS_AS(unit_power(QuadElement(3, 2, 2), 2), Error);
}

TEST_CASE("unit logarithm") {
  const QuadElement eps(3, 2, 1);
  CHECK(unit_log(QuadElement(3, 7, 4), eps).exponent == 2);
  CHECK(unit_log(QuadElement(3, 1), eps).exponent == 0);
  const UnitLog l = unit_log(QuadElement(3, 4, 2), eps);
  CHECK(l.exponent == 1);
  CHECK(l.residual == Rational(2));
  for (int k = 0; k <= 30; ++k) CHECK(unit_log(unit_power(eps, k), eps).exponent == k);
  CHECK(unit_log(unit_power(eps, -5), eps).exponent == -5);
  CHECK_THROWS_AS(unit_log(QuadElement(3, 1, 1), eps, 40), Error);
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QuadElement x(6, small_rational(rng), small_rational(rng));
    const QuadElement y(6, small_rational(rng), small_rational(rng));
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!y.norm().is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("tower products") {
  const TowerElement r2 = TowerElement::sqrt_of(2), r3 = TowerElement::sqrt_of(3), r6 = TowerElement::sqrt_of(6);
  CHECK(r2 * r2 == TowerElement(2));
  CHECK(r2 * r3 == r6);
  CHECK(r2 * r6 == TowerElement(2) * r3);
  CHECK(r3 * r6 == TowerElement(3) * r2);
  CHECK(r6 * r6 == TowerElement(6));
  CHECK(std::abs((r2 + r6).to_double() - (std::sqrt(2.0) + std::sqrt(6.0))) < 1e-15);
  CHECK_THROWS_AS(TowerElement::sqrt_of(5), Error);
}

TEST_CASE("tower ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_tower(rng), b = random_tower(rng), c = random_tower(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}
