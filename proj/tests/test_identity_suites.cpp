#include <doctest.h>

#include "selberg/identity_suites.hpp"

using namespace selberg;

TEST_CASE("suite names round-trip") {
  for (Suite s : kAllSuites) CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("all").has_value());
  CHECK_FALSE(parse_suite("Saalschutz").has_value());
}

TEST_CASE("every suite passes") {
  for (Suite s : kAllSuites) {
    CAPTURE(to_string(s));
    const SuiteReport report = run_suite(s, 300, 2024);
    CHECK(report.total() == 300);
    CHECK(report.failed == 0);
    if (!report.failures.empty()) MESSAGE(report.failures.front());
  }
}

TEST_CASE("suites are deterministic in the seed") {
  const SuiteReport a = run_suite(Suite::Contiguous, 50, 9);
  const SuiteReport b = run_suite(Suite::Contiguous, 50, 9);
  CHECK(a.passed == b.passed);
  CHECK(a.failures == b.failures);
}

TEST_CASE("C14 iteration agrees with the closed form") {
  const HypSeries s({-4, Rational(1, 3), 2, Rational(-5, 2)}, {Rational(7, 2), 3, Rational(2, 5)}, Rational(-2));
  for (std::uint64_t r = 0; r <= 4; ++r) {
    auto closed = contiguous_decompose(s, -4, r);
    auto iterated = c14_iterate(s, -4, r);
    REQUIRE(closed.size() == iterated.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      CHECK(closed[i].coefficient == iterated[i].coefficient);
      CHECK(closed[i].series == iterated[i].series);
    }
  }
}
