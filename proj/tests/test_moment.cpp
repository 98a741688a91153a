#include <doctest.h>

#include "selberg/error.hpp"
#include "selberg/moment.hpp"

using namespace selberg;

namespace {

JkParams P(std::uint64_t n, Rational a, Rational b, std::uint64_t k) { return {n, a, b, k}; }

}  // namespace

TEST_CASE("frozen values by every route") {
  struct Case {
    JkParams p;
    Rational expected;
  };
  const Case cases[] = {
      {P(2, 1, 1, 2), Rational(11, 30)},
      {P(1, 2, 3, 2), Rational(1, 5)},
      {P(3, 2, 2, 1), Rational(1, 2)},
      {P(5, Rational(7, 2), Rational(3, 2), 3), Rational(253, 728)},
      {P(4, Rational(3, 2), Rational(5, 2), 4), Rational(93, 512)},
      {P(2, 2, 2, 2), Rational(23, 70)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p.n);
    CAPTURE(c.p.k);
    CHECK(jk_sum(c.p) == c.expected);
    CHECK(jk_hyp(c.p) == c.expected);
    CHECK(jk_via_derivation(c.p) == c.expected);
  }
}

TEST_CASE("N = 1 is the Beta moment ratio (a)_k / (a+b)_k") {
  for (std::int64_t k = 1; k <= 5; ++k) {
    const Rational a(5, 2), b(1, 3);
    CHECK(jk_sum(P(1, a, b, k)) == pochhammer(a, k) / pochhammer(a + b, k));
  }
}

TEST_CASE("k = 0 gives 1") {
  CHECK(jk_sum(P(3, 2, 5, 0)) == 1);
  CHECK(jk_hyp(P(3, 2, 5, 0)) == 1);
  CHECK(jk_via_derivation(P(3, 2, 5, 0)) == 1);
  CHECK_THROWS_AS(jk_hyp_series(P(3, 2, 5, 0)), Error);
}

TEST_CASE("hypergeometric form") {
  const JkParams p = P(2, 1, 1, 2);
  const HypSeries s = jk_hyp_series(p);
  CHECK(s.p() == 4);
  CHECK(s.q() == 3);
  CHECK(s.argument() == 1);
  CHECK(balance(s) == -1);
  CHECK(jk_hyp_prefactor(p) * eval_terminating(s) == Rational(11, 30));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(jk_sum(P(0, 1, 1, 1)), Error);
  CHECK_THROWS_AS(jk_sum(P(2, 0, 1, 1)), Error);
  CHECK_THROWS_AS(jk_hyp(P(2, 1, Rational(-1, 2), 1)), Error);
  try {
    jk_via_derivation(P(2, -1, 1, 1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("derivation trace") {
  SUBCASE("generic parameters go through without a replay") {
    const auto trace = jk_derivation_trace(P(3, Rational(1, 2), Rational(7, 3), 3));
    CHECK_FALSE(trace.generic_replay);
    CHECK(trace.value == jk_sum(P(3, Rational(1, 2), Rational(7, 3), 3)));
    // one piece per (s, t) with s + t <= k - 1
    CHECK(trace.pieces.size() == 6);
    for (const auto& piece : trace.pieces) CHECK(piece.balance == 1);
  }
  SUBCASE("integer coincidences are resolved by the replay") {
    bool replayed = false;
    for (std::int64_t a = 1; a <= 3 && !replayed; ++a)
      for (std::int64_t b = 1; b <= 3 && !replayed; ++b)
        for (std::uint64_t n = 1; n <= 6 && !replayed; ++n)
          for (std::uint64_t k = 2; k <= 6 && !replayed; ++k) {
            const auto trace = jk_derivation_trace(P(n, a, b, k));
            CHECK(trace.value == jk_sum(P(n, a, b, k)));
            if (trace.generic_replay) {
              replayed = true;
              CHECK(trace.working_precision >= 8);
            }
          }
    CHECK(replayed);
  }
}
