#include <doctest.h>

#include "carext/rational.hpp"

using namespace carext;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  CHECK(Rational(6, 8).str() == "3/4");
  CHECK(Rational(-6, 8).str() == "-3/4");
  CHECK(Rational(3, -4).str() == "-3/4");
  CHECK(Rational(0, 7).str() == "0/1");
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse round-trips the serialized form") {
  for (const char* s : {"3/4", "-3/4", "0/1", "12345678901234567890/7"})
    CHECK(Rational::parse(s).str() == s);
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("pow2 covers both signs") {
  CHECK(Rational::pow2(0) == Rational(1));
  CHECK(Rational::pow2(5) == Rational(32));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::pow2(-40) * Rational::pow2(40) == Rational(1));
}
