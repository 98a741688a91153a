#include "selberg/identity_suites.hpp"

#include <algorithm>
#include <random>

namespace selberg {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;
constexpr std::uint64_t kAttemptsPerTrial = 1000;

// std::mt19937_64's output sequence is fixed by the standard; the mapping to
// ranges below is ours, so instances are reproducible across toolchains.
class InstanceSource {
public:
  explicit InstanceSource(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  Rational rational(std::int64_t max_num = 12, std::int64_t max_den = 6) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

private:
  std::mt19937_64 engine_;
};

// Instance rejected: a precondition of the identity does not hold.
struct Redraw {};

bool lower_nonvanishing(const HypSeries& s, std::uint64_t n) {
  return std::all_of(s.lower().begin(), s.lower().end(),
                     [n](const Rational& l) { return !pochhammer(l, n).is_zero(); });
}

Rational weighted_value(const WeightedSeries& w) { return w.coefficient * eval_terminating(w.series); }

std::vector<WeightedSeries> sorted(std::vector<WeightedSeries> v) {
  std::sort(v.begin(), v.end(), [](const WeightedSeries& x, const WeightedSeries& y) {
    if (auto c = x.series <=> y.series; c != 0) return c < 0;
    return x.coefficient < y.coefficient;
  });
  return v;
}

std::string saalschutz_trial(InstanceSource& src) {
  const auto n = static_cast<std::uint64_t>(src.integer(0, 5));
  const Rational a = src.rational(), b = src.rational(), c = src.rational();
  const Rational e = src.rational(), f = src.rational();
  const Rational g = 1 + a + b + c - e - f - Rational(static_cast<std::int64_t>(n));
  const HypSeries s({a, b, c, Rational(-static_cast<std::int64_t>(n))}, {e, f, g}, Rational(1));
  if (!lower_nonvanishing(s, n)) throw Redraw{};

  WeightedSeries image{Rational(0), s};
  try {
    image = transform_saalschutz(s, {a, b, c, n, e, f});
  } catch (const Error& err) {
    if (err.code() == ErrorCode::ZeroPrefactorDenominator) throw Redraw{};
    throw;
  }
  if (!lower_nonvanishing(image.series, n)) throw Redraw{};

  const Rational lhs = eval_terminating(s);
  const Rational rhs = weighted_value(image);
  const auto& up = image.series.upper();
  const bool keeps_n =
      std::find(up.begin(), up.end(), Rational(-static_cast<std::int64_t>(n))) != up.end();
  if (lhs == rhs && balance(image.series) == Rational(1) && keeps_n) return {};
  return s.str() + ": lhs " + lhs.str() + ", rhs " + rhs.str() + ", image " + image.series.str();
}

std::string contiguous_trial(InstanceSource& src, std::uint64_t r) {
  const auto n = src.integer(0, 5);
  const Rational a(-n);
  const HypSeries s({a, src.rational(), src.rational(), src.rational()},
                    {src.rational(), src.rational(), src.rational()}, src.nonzero_rational(3, 3));

  std::vector<WeightedSeries> pieces;
  Rational lhs;
  Rational rhs;
  try {
    pieces = contiguous_decompose(s, a, r);
    lhs = eval_terminating(s);
    for (const auto& p : pieces) rhs += weighted_value(p);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::SingularLowerParameter ||
        err.code() == ErrorCode::ZeroDenominatorCoefficient)
      throw Redraw{};
    throw;
  }
  if (lhs != rhs) return s.str() + " r=" + std::to_string(r) + ": lhs " + lhs.str() + ", rhs " + rhs.str();
  if (sorted(pieces) != sorted(c14_iterate(s, a, r)))
    return s.str() + " r=" + std::to_string(r) + ": closed form differs from iterated C14";
  return {};
}

std::string chu_trial(InstanceSource& src) {
  const auto n = static_cast<std::uint64_t>(src.integer(0, 6));
  const Rational a = src.rational(), c = src.rational();
  if (pochhammer(c, n).is_zero()) throw Redraw{};
  const HypSeries s({a, Rational(-static_cast<std::int64_t>(n))}, {c}, Rational(1));
  const Rational closed = chu_vandermonde(a, n, c);
  const Rational summed = eval_terminating(s);
  if (closed == summed) return {};
  return s.str() + ": closed form " + closed.str() + ", term sum " + summed.str();
}

std::string t2106_trial(InstanceSource& src) {
  const auto n = static_cast<std::uint64_t>(src.integer(0, 6));
  const Rational a = src.rational(), c = src.rational();
  const Rational z = src.nonzero_rational(6, 4);
  const HypSeries s({a, Rational(-static_cast<std::int64_t>(n))}, {c}, z);
  if (!lower_nonvanishing(s, n)) throw Redraw{};
  const WeightedSeries image = transform_2f1_t2106(s, {a, n, c});
  if (!lower_nonvanishing(image.series, n)) throw Redraw{};
  const Rational lhs = eval_terminating(s);
  const Rational rhs = weighted_value(image);
  if (lhs == rhs) return {};
  return s.str() + ": lhs " + lhs.str() + ", rhs " + rhs.str();
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Saalschutz: return "saalschutz";
    case Suite::Contiguous: return "contiguous";
    case Suite::ChuVandermonde: return "chu";
    case Suite::T2106: return "t2106";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite s : kAllSuites)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

SuiteReport run_suite(Suite suite, std::uint64_t trials, std::uint64_t seed) {
  // distinct streams per suite so that "all" and a single suite agree
  InstanceSource src(seed ^ (0x51ed270b27f1a3c5ULL * (static_cast<std::uint64_t>(suite) + 1)));
  SuiteReport report;
  report.suite = suite;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::string failure;
    bool drawn = false;
    for (std::uint64_t attempt = 0; attempt < kAttemptsPerTrial && !drawn; ++attempt) {
      try {
        switch (suite) {
          case Suite::Saalschutz: failure = saalschutz_trial(src); break;
          case Suite::Contiguous: failure = contiguous_trial(src, trial % 5); break;
          case Suite::ChuVandermonde: failure = chu_trial(src); break;
          case Suite::T2106: failure = t2106_trial(src); break;
        }
        drawn = true;
      } catch (const Redraw&) {
      } catch (const Error& err) {
        failure = std::string("unexpected error ") + std::string(to_string(err.code())) + ": " + err.what();
        drawn = true;
      }
    }
    if (!drawn) failure = "no admissible instance after " + std::to_string(kAttemptsPerTrial) + " draws";

    if (failure.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      if (report.failures.size() < kMaxRecordedFailures) report.failures.push_back(std::move(failure));
    }
  }
  return report;
}

std::vector<WeightedSeries> c14_iterate(const HypSeries& s, const Rational& unshifted,
                                        std::uint64_t r) {
  if (s.p() != 4 || s.q() != 3)
    throw Error(ErrorCode::InvalidArgument, "C14 applies to a 4F3, got " + s.str());

  std::vector<WeightedSeries> split_off;
  Rational weight(1);
  HypSeries lead = s;
  for (std::uint64_t step = 0; step < r; ++step) {
    std::vector<Rational> upper(lead.upper().begin(), lead.upper().end());
    auto it = std::find(upper.begin(), upper.end(), unshifted);
    if (it == upper.end())
      throw Error(ErrorCode::RoleMismatch, unshifted.str() + " is not an upper parameter of " + s.str());
    upper.erase(it);

    Rational num = lead.argument();
    Rational den(1);
    for (const Rational& u : upper) num *= u;
    for (const Rational& l : lead.lower()) den *= l;
    if (den.is_zero())
      throw Error(ErrorCode::ZeroDenominatorCoefficient, "EFG vanishes in C14 at step " + std::to_string(step));

    std::vector<Rational> down = upper;
    down.push_back(unshifted - Rational(1));
    split_off.push_back({weight, HypSeries(down, {lead.lower().begin(), lead.lower().end()}, lead.argument())});

    std::vector<Rational> up_next;
    for (const Rational& u : upper) up_next.push_back(u + Rational(1));
    up_next.push_back(unshifted);
    std::vector<Rational> lo_next;
    for (const Rational& l : lead.lower()) lo_next.push_back(l + Rational(1));
    weight *= num / den;
    lead = HypSeries(std::move(up_next), std::move(lo_next), lead.argument());
  }

  std::vector<WeightedSeries> out;
  out.reserve(r + 1);
  out.push_back({weight, lead});
  for (auto& w : split_off) out.push_back(std::move(w));
  return out;
}

}  // namespace selberg
