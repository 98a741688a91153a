#include <doctest.h>

#include "selberg/detail/laurent.hpp"
#include "selberg/error.hpp"

using selberg::ErrorCode;
using selberg::Rational;
using selberg::detail::Laurent;

TEST_CASE("exact arithmetic stays exact") {
  const Laurent e = Laurent::linear(0, 1, 8);
  const Laurent x = (Laurent(2) + e) * (Laurent(2) - e);
  CHECK(x.exact());
  CHECK(x.coefficient(0) == 4);
  CHECK(x.coefficient(1) == 0);
  CHECK(x.coefficient(2) == -1);
  CHECK(Laurent(3).is_constant());
  CHECK_FALSE(e.is_constant());
}

TEST_CASE("0/0 resolves to the limit") {
  // (2 eps + eps^2) / (3 eps) = 2/3 + eps/3
  const Laurent e = Laurent::linear(0, 1, 8);
  const Laurent q = (Laurent(2) * e + e * e) / (Laurent(3) * e);
  CHECK(q.coefficient(0) == Rational(2, 3));
  CHECK(q.coefficient(1) == Rational(1, 3));
}

TEST_CASE("inverse of a unit is a geometric series") {
  const Laurent one_minus = Laurent::linear(1, -1, 6);
  const Laurent inv = Laurent(1) / one_minus;
  CHECK_FALSE(inv.exact());
  for (int i = 0; i < 6; ++i) CHECK(inv.coefficient(i) == 1);
  CHECK_THROWS_AS(inv.coefficient(inv.precision()), selberg::Error);
}

TEST_CASE("poles are represented with negative valuation") {
  const Laurent e = Laurent::linear(0, 1, 4);
  const Laurent p = Laurent(1) / e;
  CHECK(p.valuation() == -1);
  CHECK(p.coefficient(-1) == 1);
  CHECK((p * e).coefficient(0) == 1);
}

TEST_CASE("zero tests") {
  const Laurent e = Laurent::linear(0, 1, 4);
  CHECK(is_zero(Laurent(0)));
  CHECK_FALSE(is_zero(e));
  CHECK_THROWS_AS(Laurent(1) / Laurent(0), selberg::Error);
  // cancellation of every known coefficient leaves an undetermined value
  const Laurent inv = Laurent(1) / Laurent::linear(1, 1, 2);
  const Laurent lost = inv - inv;
  CHECK(lost.is_indeterminate());
  try {
    (void)is_zero(lost);
    FAIL("expected PrecisionExhausted");
  } catch (const selberg::Error& err) {
    CHECK(err.code() == ErrorCode::PrecisionExhausted);
  }
}

TEST_CASE("nonpositive integer order only for exact constants") {
  CHECK(nonpositive_integer_order(Laurent(-3)) == 3u);
  CHECK_FALSE(nonpositive_integer_order(Laurent::linear(-3, 1, 4)).has_value());
}
