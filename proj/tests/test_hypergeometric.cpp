#include <doctest.h>

#include "selberg/error.hpp"
#include "selberg/hypergeometric.hpp"

using namespace selberg;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected selberg::Error");
  return ErrorCode::InvalidArgument;
}

Rational value(const WeightedSeries& w) { return w.coefficient * eval_terminating(w.series); }

}  // namespace

TEST_CASE("terminating evaluation") {
  CHECK(eval_terminating(HypSeries({3, -2}, {5}, 1)) == Rational(1, 5));
  CHECK(eval_terminating(HypSeries({1, -1}, {2}, 1)) == Rational(1, 2));
  // -n with n = 0 is the constant 1 whatever the rest
  CHECK(eval_terminating(HypSeries({0, 7}, {Rational(1, 3)}, 9)) == 1);
  // termination order is the smallest n
  CHECK(HypSeries({-3, -1, 2}, {4, 5}, 1).termination_order() == 1u);
}

TEST_CASE("terminating evaluation errors") {
  CHECK(code_of([] { eval_terminating(HypSeries({Rational(1, 2)}, {2}, 1)); }) == ErrorCode::NotTerminating);
  // (-1)_m vanishes at m = 2 before the order 3 is reached
  CHECK(code_of([] { eval_terminating(HypSeries({-3, 1}, {-1}, 1)); }) ==
        ErrorCode::SingularLowerParameter);
  // vanishing exactly at the order is harmless
  CHECK_NOTHROW(eval_terminating(HypSeries({-2, 1}, {-2}, 1)));
}

TEST_CASE("balance and ordering") {
  const HypSeries s({1, 1, 1, -1}, {2, 2, -1}, 1);
  CHECK(balance(s) == 1);
  CHECK(s.str() == "4F3[-1, 1, 1, 1; -1, 2, 2; 1]");
  CHECK(HypSeries({2, 1}, {3}, 1) == HypSeries({1, 2}, {3}, 1));
}

TEST_CASE("Chu-Vandermonde closed form") {
  CHECK(chu_vandermonde(3, 2, 5) == Rational(1, 5));
  CHECK(chu_vandermonde(Rational(1, 2), 0, 7) == 1);
  CHECK(code_of([] { chu_vandermonde(1, 3, -1); }) == ErrorCode::ZeroDenominator);
}

TEST_CASE("balanced 4F3 transformation: worked example") {
  const HypSeries s({1, 1, 1, -1}, {2, 2, -1}, 1);
  const WeightedSeries image = transform_saalschutz(s, {1, 1, 1, 1, 2, 2});
  CHECK(eval_terminating(s) == Rational(5, 4));
  CHECK(image.coefficient == 1);
  CHECK(value(image) == Rational(5, 4));
  CHECK(balance(image.series) == 1);
}

TEST_CASE("balanced 4F3 transformation: preconditions") {
  const HypSeries unbalanced({1, 1, 1, -1}, {2, 2, 3}, 1);
  CHECK(code_of([&] { transform_saalschutz(unbalanced, {1, 1, 1, 1, 2, 2}); }) == ErrorCode::NotBalanced);
  const HypSeries s({1, 1, 1, -1}, {2, 2, -1}, 1);
  CHECK(code_of([&] { transform_saalschutz(s, {1, 1, 1, 1, 2, 3}); }) == ErrorCode::RoleMismatch);
  const HypSeries wrong_z({1, 1, 1, -1}, {2, 2, -1}, 2);
  CHECK_THROWS_AS(transform_saalschutz(wrong_z, {1, 1, 1, 1, 2, 2}), Error);
}

TEST_CASE("2F1 transformation: worked example") {
  const HypSeries s({2, -1}, {3}, 2);
  const WeightedSeries image = transform_2f1_t2106(s, {2, 1, 3});
  CHECK(eval_terminating(s) == Rational(-1, 3));
  CHECK(image.coefficient == Rational(2, 3));
  CHECK(eval_terminating(image.series) == Rational(-1, 2));
  CHECK(image.series.argument() == Rational(1, 2));
  CHECK(value(image) == eval_terminating(s));
}

TEST_CASE("2F1 transformation: zero argument") {
  CHECK(code_of([] { transform_2f1_t2106(HypSeries({2, -1}, {3}, 0), {2, 1, 3}); }) == ErrorCode::ZeroArgument);
}

TEST_CASE("contiguous decomposition") {
  const HypSeries s({-3, Rational(1, 2), 2, Rational(5, 3)}, {Rational(7, 2), 4, Rational(-1, 3)}, Rational(3, 4));
  SUBCASE("r = 0 is the identity") {
    const auto pieces = contiguous_decompose(s, -3, 0);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].coefficient == 1);
    CHECK(pieces[0].series == s);
  }
  for (std::uint64_t r = 1; r <= 4; ++r) {
    CAPTURE(r);
    const auto pieces = contiguous_decompose(s, -3, r);
    REQUIRE(pieces.size() == r + 1);
    Rational total;
    for (const auto& p : pieces) total += value(p);
    CHECK(total == eval_terminating(s));
    // the A-1 pieces keep every other parameter shifted by s only
    for (std::uint64_t j = 1; j <= r; ++j) {
      const auto up = pieces[j].series.upper();
      CHECK(std::find(up.begin(), up.end(), Rational(-4)) != up.end());
    }
  }
}

TEST_CASE("contiguous decomposition requires the designated parameter") {
  const HypSeries s({-3, 1, 2, 5}, {7, 4, 3}, 1);
  CHECK_THROWS_AS(contiguous_decompose(s, 9, 2), Error);
}
