#include "selberg/moment.hpp"

#include <algorithm>
#include <array>

#include "selberg/detail/hyp_kernels.hpp"
#include "selberg/detail/laurent.hpp"

namespace selberg {

namespace {

using detail::HypScalar;
using detail::Laurent;
using detail::WeightedParams;

Rational as_rational(const Rational& x) { return x; }

Rational as_rational(const Laurent& x) {
  if (!x.is_constant())
    throw Error(ErrorCode::NotBalanced, "balance depends on the perturbation: " + x.str());
  return x.coefficient(0);
}

template <HypScalar S>
S integer(std::int64_t v) {
  return S(v);
}

// After r-fold contiguous expansion with r chosen so that the leading series
// carries an upper parameter 0, that series and its copy with A -> A-1 both
// equal 1 and share the weight of the s = r term. Rewrite the leading term as
// that s = r term and move it to the back, giving s = 0..r in order.
template <HypScalar S>
void compact_leading(std::vector<WeightedParams<S>>& terms) {
  auto& lead = terms.front();
  bool has_zero = false;
  for (const S& u : lead.upper)
    if (auto n = nonpositive_integer_order(u); n && *n == 0) has_zero = true;
  if (!has_zero)
    throw Error(ErrorCode::InvalidArgument, "leading contiguous term does not reduce to 1");
  lead.upper[0] = lead.upper[0] - integer<S>(1);
  std::rotate(terms.begin(), terms.begin() + 1, terms.end());
}

template <HypScalar S>
S pipeline(std::uint64_t n_vars, const S& a, const S& b, std::uint64_t k,
           std::vector<DerivationPiece>& pieces) {
  const S one = integer<S>(1);
  const S n = integer<S>(static_cast<std::int64_t>(n_vars));
  const S ks = integer<S>(static_cast<std::int64_t>(k));
  const S two = integer<S>(2);
  const S three = integer<S>(3);

  const S prefactor = detail::rising(n + one, k - 1) * detail::rising(a + n - one, k) /
                      (S(factorial(k)) * detail::rising(two * n + a + b - two, k));

  // roles of the 4F3 form: A; B, C, D; E, F, G
  const S a0 = one - n;
  const std::array<S, 3> bcd{one - ks, two - a - n, three - a - b - ks - two * n};
  const std::array<S, 3> efg{two - a - ks - n, one - ks - n, three - a - b - two * n};

  auto first = detail::contiguous_expansion(a0, bcd, efg, one, k - 1);
  compact_leading(first);

  S total = integer<S>(0);
  for (std::uint64_t s = 0; s < first.size(); ++s) {
    const auto& outer = first[s];
    const std::array<S, 3> bcd_s{outer.upper[1], outer.upper[2], outer.upper[3]};
    const std::array<S, 3> efg_s{outer.lower[0], outer.lower[1], outer.lower[2]};
    auto second = detail::contiguous_expansion(outer.upper[0], bcd_s, efg_s, one, k - s - 1);
    compact_leading(second);

    for (std::uint64_t t = 0; t < second.size(); ++t) {
      const auto& piece = second[t];
      S bal = integer<S>(0);
      for (const S& l : piece.lower) bal = bal + l;
      for (const S& u : piece.upper) bal = bal - u;
      const Rational bal_q = as_rational(bal);
      pieces.push_back({s, t, bal_q});
      if (bal_q != Rational(1))
        throw Error(ErrorCode::NotBalanced, "piece (s=" + std::to_string(s) + ", t=" +
                                                std::to_string(t) + ") has balance " + bal_q.str());

      // upper = [-1-N, 1-k+u, 2-a-N+u, 3-a-b-k-2N+u], lower = [3-a-b-2N+u... order as efg]
      // A = 3-a-b-k-2N+u, B = -1-N, C = 2-a-N+u, -n = 1-k+u, E = 3-a-b-2N+u, F = 1-k-N+u
      const std::uint64_t u = s + t;
      const std::uint64_t order = k - 1 - u;
      if (nonpositive_integer_order(piece.upper[1]) != order)
        throw Error(ErrorCode::RoleMismatch, "terminating parameter is not 1-k+s+t");
      auto image = detail::saalschutz_image(piece.upper[3], piece.upper[0], piece.upper[2], order,
                                            piece.lower[2], piece.lower[1]);
      const S value = detail::sum_terminating<S>(image.upper, image.lower, image.argument);
      total = total + outer.coefficient * piece.coefficient * image.coefficient * value;
    }
  }
  return prefactor * total;
}

bool is_coincidence(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularLowerParameter:
    case ErrorCode::ZeroPrefactorDenominator:
    case ErrorCode::ZeroDenominatorCoefficient:
    case ErrorCode::DivisionByZero:
      return true;
    default:
      return false;
  }
}

}  // namespace

void JkParams::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
  if (a.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "a must be > 0, got " + a.str());
  if (b.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "b must be > 0, got " + b.str());
}

Rational jk_sum(const JkParams& p) {
  p.validate();
  if (p.k == 0) return Rational(1);

  const Rational n(static_cast<std::int64_t>(p.n));
  const std::uint64_t terms = std::min(p.k, p.n);
  Rational acc;
  for (std::uint64_t i = 0; i < terms; ++i) {
    const Rational is(static_cast<std::int64_t>(i));
    const Rational den = pochhammer(p.a + p.b + Rational(2) * n - is - Rational(2), p.k);
    if (den.is_zero())
      throw Error(ErrorCode::ZeroDenominator, "(a+b+2N-i-2)_k vanishes at i = " + std::to_string(i));
    Rational term = binomial(static_cast<std::int64_t>(p.k - 1), static_cast<std::int64_t>(i)) *
                    pochhammer(n - is, p.k) * pochhammer(p.a + n - is - Rational(1), p.k) / den;
    if (i % 2) term = -term;
    acc += term;
  }
  return acc / (n * factorial(p.k));
}

Rational jk_hyp_prefactor(const JkParams& p) {
  p.validate();
  if (p.k == 0) throw Error(ErrorCode::InvalidArgument, "the 4F3 form needs k >= 1");
  const Rational n(static_cast<std::int64_t>(p.n));
  return pochhammer(n + Rational(1), p.k - 1) * pochhammer(p.a + n - Rational(1), p.k) /
         (factorial(p.k) * pochhammer(Rational(2) * n + p.a + p.b - Rational(2), p.k));
}

HypSeries jk_hyp_series(const JkParams& p) {
  p.validate();
  if (p.k == 0) throw Error(ErrorCode::InvalidArgument, "the 4F3 form needs k >= 1");
  const Rational n(static_cast<std::int64_t>(p.n));
  const Rational k(static_cast<std::int64_t>(p.k));
  const Rational& a = p.a;
  const Rational& b = p.b;
  return HypSeries({1 - n, 1 - k, 2 - a - n, 3 - a - b - k - 2 * n},
                   {2 - a - k - n, 1 - k - n, 3 - a - b - 2 * n}, Rational(1));
}

Rational jk_hyp(const JkParams& p) {
  p.validate();
  if (p.k == 0) return Rational(1);
  return jk_hyp_prefactor(p) * eval_terminating(jk_hyp_series(p));
}

DerivationTrace jk_derivation_trace(const JkParams& p) {
  p.validate();
  DerivationTrace trace;
  if (p.k == 0) {
    trace.value = Rational(1);
    return trace;
  }

  try {
    trace.value = pipeline<Rational>(p.n, p.a, p.b, p.k, trace.pieces);
    return trace;
  } catch (const Error& e) {
    if (!is_coincidence(e.code())) throw;
  }

  // Every intermediate quantity is a rational function of a; the exact
  // pipeline only broke on a removable 0/0. Replay at a+eps and read off the
  // eps^0 coefficient of the (pole-free) result.
  trace.generic_replay = true;
  for (int precision = 8; precision <= 256; precision *= 2) {
    trace.pieces.clear();
    trace.working_precision = precision;
    const Laurent a = Laurent::linear(p.a, Rational(1), precision);
    const Laurent b(p.b);
    Laurent value = a;
    try {
      value = pipeline<Laurent>(p.n, a, b, p.k, trace.pieces);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PrecisionExhausted) continue;
      throw;
    }
    if (value.precision() <= 0) continue;
    if (value.valuation() < 0)
      throw Error(ErrorCode::SingularLowerParameter,
                  "generic replay of the derivation has a pole at the given parameters");
    trace.value = value.coefficient(0);
    return trace;
  }
  throw Error(ErrorCode::PrecisionExhausted, "generic replay did not converge within working precision 256");
}

}  // namespace selberg
