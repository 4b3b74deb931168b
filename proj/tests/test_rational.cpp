#include "vpfix/rational.hpp"

#include "doctest.h"
#include "vpfix/errors.hpp"

using namespace vpfix;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, 5) == Rational(0, 9));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
  CHECK(Rational(5) == Rational(5, 1));
  CHECK(1 - Rational(2, 7) == Rational(5, 7));
}

TEST_CASE("ordering by cross multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 15) > Rational(1, 3));
  CHECK(Rational(1, 3) <= Rational(2, 6));
}

TEST_CASE("string form") {
  CHECK(Rational(7, 15).str() == "7/15");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(1, 2).is_integer() == false);
  CHECK(Rational(8, 4).is_integer());
}
