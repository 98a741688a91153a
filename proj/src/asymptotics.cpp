#include "selberg/asymptotics.hpp"

#include "selberg/moment.hpp"
#include "parallel.hpp"

namespace selberg {

void LimitParams::validate() const {
  if (a1.sign() < 0) throw Error(ErrorCode::InvalidArgument, "a1 must be >= 0, got " + a1.str());
  if (b1.sign() < 0) throw Error(ErrorCode::InvalidArgument, "b1 must be >= 0, got " + b1.str());
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
}

Rational limit_theorem(const LimitParams& lp) {
  lp.validate();
  const std::uint64_t k = lp.k;
  const auto ki = static_cast<std::int64_t>(k);
  const Rational a1p1 = lp.a1 + Rational(1);
  const Rational s1 = lp.a1 + lp.b1 + Rational(1);
  const Rational s2 = lp.a1 + lp.b1 + Rational(2);

  Rational total;
  for (std::int64_t m = 0; m < ki; ++m) {
    for (std::int64_t l = 0; l <= ki - m - 1; ++l) {
      Rational term = binomial(ki - 1, m) * binomial(ki - m - 1, l) * factorial(k + l - 1) *
                      factorial(m + 1) / (factorial(k - 1) * factorial(m + l + 1));
      term *= power(lp.a1, k - m - l - 1) * power(a1p1, m + l + 1) * power(s1, l) /
              power(s2, k + l);
      if ((ki - m - 1 + l) % 2) term = -term;
      total += term;
    }
  }
  return total;
}

Rational limit_corollary(const LimitParams& lp) {
  lp.validate();
  const auto ki = static_cast<std::int64_t>(lp.k);
  const Rational a1p1 = lp.a1 + Rational(1);
  const Rational s2 = lp.a1 + lp.b1 + Rational(2);

  Rational total;
  for (std::int64_t j = 0; j < ki; ++j) {
    Rational inner;
    for (std::int64_t i = 0; i <= ki - j - 1; ++i)
      inner += binomial(ki, i) * binomial(ki, i + j + 1) * power(a1p1, i);
    Rational term = binomial(ki + j - 1, j) * power(a1p1, j + 1) / power(s2, ki + j) * inner;
    if (j % 2) term = -term;
    total += term;
  }
  return total / Rational(ki);
}

std::vector<ConvergenceRow> convergence_table(const LimitParams& lp,
                                              std::span<const std::uint64_t> schedule,
                                              unsigned threads) {
  lp.validate();
  std::vector<JkParams> params;
  params.reserve(schedule.size());
  for (std::uint64_t n : schedule) {
    JkParams p{n, lp.a1 * Rational(static_cast<std::int64_t>(n)),
               lp.b1 * Rational(static_cast<std::int64_t>(n)), lp.k};
    try {
      p.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidSchedule, "schedule entry N = " + std::to_string(n) + ": " + e.what());
    }
    params.push_back(std::move(p));
  }

  const Rational limit = limit_corollary(lp);
  std::vector<ConvergenceRow> rows(params.size());
  parallel_for(params.size(), threads, [&](std::size_t i) {
    const JkParams& p = params[i];
    Rational jk = jk_sum(p);
    Rational err = abs(jk - limit);
    rows[i] = {p.n, p.a, p.b, std::move(jk), limit, std::move(err)};
  });
  return rows;
}

}  // namespace selberg
