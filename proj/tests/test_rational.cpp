#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "facloc/rational.hpp"

using facloc::Rational;
using Int = boost::multiprecision::cpp_int;

TEST_CASE("construction is canonical") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5).denominator() == 1);
  CHECK(Rational(-9, 3).str() == "-3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers, fractions, finite decimals") {
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("0.50") == Rational(1, 2));
  CHECK(Rational::parse("+7/14") == Rational(1, 2));
  CHECK(Rational::parse("007") == Rational(7));
  CHECK(Rational::parse("141421356/100000000") == Rational(35355339, 25000000));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("2."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(".5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1e5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("--3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("nan"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(abs(Rational(-3, 5)) == Rational(3, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  Rational acc;
  for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
  CHECK(acc == Rational(1));
}

TEST_CASE("comparisons cross denominators") {
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(5, 10) <= Rational(1, 2));
  CHECK(Rational(5, 10) >= Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(1, 3) != Rational(2, 6) - Rational(1, 1000000000));
}

TEST_CASE("floor rounds toward negative infinity") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(-4).floor() == -4);
  CHECK(Rational(0).floor() == 0);
  CHECK(Rational(-1, 3).floor() == -1);
}

TEST_CASE("sign and predicates") {
  CHECK(Rational(0).is_zero());
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-2, 7).sign() == -1);
  CHECK(Rational(2, 7).sign() == 1);
  CHECK(Rational(8, 4).is_integer());
  CHECK_FALSE(Rational(8, 3).is_integer());
}

TEST_CASE("string renderings") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(12071, 5000).decimal(6) == "2.414200");
  CHECK(Rational(10355339, 12500000).decimal(6) == "0.828427");
  CHECK(Rational(2, 3).decimal(6) == "0.666667");
  CHECK(Rational(-1, 8).decimal(3) == "-0.125");
  CHECK(Rational(2).decimal(6) == "2.000000");
  CHECK(Rational(1, 2).decimal(0) == "1");
  CHECK(Rational(-1, 2).decimal(0) == "-1");
  CHECK(Rational(-1, 1000000).decimal(2) == "0.00");
  CHECK(Rational(1999, 1000).decimal(2) == "2.00");

  std::ostringstream os;
  os << Rational(-5, 4);
  CHECK(os.str() == "-5/4");
}

TEST_CASE("huge values stay exact") {
  Rational big = Rational(Int("123456789012345678901234567890"), Int(7));
  CHECK(big * Rational(7) == Rational(Int("123456789012345678901234567890")));
  Rational tiny = Rational(1, Int("1000000000000000000000000"));
  CHECK(tiny + tiny == Rational(2, Int("1000000000000000000000000")));
  CHECK(tiny > Rational(0));
}
