#include <doctest.h>

#include "selberg/error.hpp"
#include "selberg/rational.hpp"

using selberg::ErrorCode;
using selberg::Rational;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const selberg::Error& e) {
    return e.code();
  }
  FAIL("expected selberg::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse accepts integers, fractions and exact decimals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("7/3").str() == "7/3");
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1..2", "1/2/3", "0x10", " "})
    CHECK_MESSAGE(code_of([&] { Rational::parse(bad); }) == ErrorCode::Parse, bad);
}

TEST_CASE("canonical form and decimal rendering") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(11, 30).decimal(5) == "0.36667");
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
  CHECK(Rational(1, 8).decimal(2) == "0.13");
  CHECK(Rational(2).decimal(0) == "2");
  CHECK(Rational(1, 3).decimal(0) == "0");
}

TEST_CASE("division by zero is reported") {
  CHECK(code_of([] { return Rational(1) / Rational(0); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { Rational(1, 0); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(3), 0) == 1);
  CHECK(pochhammer(Rational(3), 2) == 12);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  // a factor vanishes: exactly zero
  CHECK(pochhammer(Rational(-2), 3).is_zero());
  CHECK(pochhammer(Rational(-2), 2) == 2);
}

TEST_CASE("binomial, factorial, power") {
  CHECK(selberg::binomial(5, 2) == 10);
  CHECK(selberg::binomial(5, 7) == 0);
  CHECK(selberg::binomial(0, 0) == 1);
  CHECK(code_of([] { selberg::binomial(-1, 0); }) == ErrorCode::InvalidArgument);
  CHECK(selberg::factorial(6) == 720);
  CHECK(selberg::power(Rational(0), 0) == 1);
  CHECK(selberg::power(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("nonpositive integer detection") {
  CHECK(nonpositive_integer_order(Rational(-4)) == 4u);
  CHECK(nonpositive_integer_order(Rational(0)) == 0u);
  CHECK_FALSE(nonpositive_integer_order(Rational(1)).has_value());
  CHECK_FALSE(nonpositive_integer_order(Rational(-1, 2)).has_value());
}
