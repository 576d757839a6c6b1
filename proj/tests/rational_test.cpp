#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "trochoid/rational.hpp"

using trochoid::Rational;

TEST_CASE("fractions are kept in lowest terms with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  // 128-bit intermediates let big/big cancel.
  CHECK(big / big == Rational(1));
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("15") == Rational(15));
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("0.7") == Rational(7, 10));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("1.5e-3") == Rational(3, 2000));
  CHECK(Rational::parse("2e3") == Rational(2000));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);

  CHECK(Rational::parse_fraction("4/1") == Rational(4));
  CHECK_THROWS_AS(Rational::parse_fraction("2.5"), std::invalid_argument);

  CHECK(Rational::from_double(0.1) == Rational(1, 10));
  CHECK(Rational::from_double(12.0) == Rational(12));
}

TEST_CASE("rational gcd") {
  CHECK(gcd(Rational(3), Rational(18)) == Rational(3));
  CHECK(gcd(Rational(4), Rational(19)) == Rational(1));
  CHECK(gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
  CHECK(gcd(Rational(5, 2), Rational(0)) == Rational(5, 2));
  CHECK_THROWS(gcd(Rational(-1), Rational(2)));
}

TEST_CASE("to_string parses back to the same value") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.to_string()) == r);
    // field laws on small values
    const Rational s(num(rng), den(rng));
    CHECK((r + s) - s == r);
    if (!s.is_zero()) CHECK((r * s) / s == r);
  }
}
