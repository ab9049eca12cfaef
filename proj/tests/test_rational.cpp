#include <doctest.h>

#include "mlde2/rational.hpp"

using mlde2::Rational;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK((Rational(2, 4) + Rational(1, 4)).str() == "3/4");
  CHECK((Rational(1, 3) * Rational(3, 1)).str() == "1");
}

TEST_CASE("parsing accepts P and P/Q and rejects junk") {
  CHECK(Rational::parse("11/60") == Rational(11, 60));
  CHECK(Rational::parse("-7/24") == Rational(-7, 24));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("floor and fractional part") {
  CHECK(Rational(-1, 24).frac() == Rational(23, 24));
  CHECK(Rational(35, 12).frac() == Rational(11, 12));
  CHECK(Rational(-49, 120).frac() == Rational(71, 120));
  CHECK(Rational(5).frac() == Rational(0));
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("integer powers and exact square roots") {
  CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow_int(0) == Rational(1));
  REQUIRE(Rational(36, 576).sqrt_exact().has_value());
  CHECK(*Rational(36, 576).sqrt_exact() == Rational(1, 4));
  CHECK(!Rational(145, 36).sqrt_exact().has_value());
  CHECK(!Rational(-1).sqrt_exact().has_value());
}

TEST_CASE("division guards") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(5, 3).is_integer());
}
