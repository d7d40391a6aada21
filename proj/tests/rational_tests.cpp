#include <doctest.h>

#include <sstream>

#include "pclyap/rational.hpp"

using pclyap::DomainError;
using pclyap::ParseError;
using pclyap::Rational;

TEST_CASE("parse_rational accepts integers, fractions, decimals, exponents") {
  CHECK(pclyap::parse_rational("42") == Rational(42));
  CHECK(pclyap::parse_rational("-17") == Rational(-17));
  CHECK(pclyap::parse_rational("+5") == Rational(5));
  CHECK(pclyap::parse_rational("-3/10") == Rational(-3, 10));
  CHECK(pclyap::parse_rational("6/4") == Rational(3, 2));
  CHECK(pclyap::parse_rational("-0.75") == Rational(-3, 4));
  CHECK(pclyap::parse_rational("0.1") == Rational(1, 10));
  CHECK(pclyap::parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(pclyap::parse_rational("1e2") == Rational(100));
  CHECK(pclyap::parse_rational("1.5E1") == Rational(15));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(pclyap::parse_rational(""), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational("1//2"), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational("0x10"), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational(" 1"), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational("1 "), ParseError);
  CHECK_THROWS_AS(pclyap::parse_rational("1e"), ParseError);
}

TEST_CASE("to_string picks the shortest exact form") {
  CHECK(pclyap::to_string(Rational(42)) == "42");
  CHECK(pclyap::to_string(Rational(-7)) == "-7");
  CHECK(pclyap::to_string(Rational(1, 8)) == "0.125");
  CHECK(pclyap::to_string(Rational(-3, 4)) == "-0.75");
  CHECK(pclyap::to_string(Rational(1, 3)) == "1/3");
  CHECK(pclyap::to_string(Rational(-22, 7)) == "-22/7");
  // round trip across all three forms
  for (const char* text : {"42", "-0.75", "1/3", "2.5e-3"}) {
    const Rational r = pclyap::parse_rational(text);
    CHECK(pclyap::parse_rational(pclyap::to_string(r)) == r);
  }
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 10) * Rational(10) == Rational(1));
  CHECK(Rational(1) - Rational(1, 3) == Rational(2, 3));
  CHECK(Rational(1, 3) / Rational(1, 3) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  Rational acc(0);
  for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
  CHECK(acc == Rational(1));  // the classic float failure, exact here
}

TEST_CASE("rational comparisons, sign, abs") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(pclyap::abs(Rational(-3, 7)) == Rational(3, 7));
  CHECK(Rational(7, 7).is_integer());
  CHECK(!Rational(1, 3).is_integer());
}

TEST_CASE("int64 conversion guards") {
  CHECK(Rational(123).fits_int64());
  CHECK(Rational(123).to_int64() == 123);
  const Rational big = Rational(1LL << 62) * Rational(4);  // 2^64
  CHECK(big.is_integer());
  CHECK(!big.fits_int64());
}

TEST_CASE("rational streams like its string form") {
  std::ostringstream os;
  os << Rational(-3, 4);
  CHECK(os.str() == "-0.75");
}
