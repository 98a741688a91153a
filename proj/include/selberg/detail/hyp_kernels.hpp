#pragma once

// Scalar-generic forms of the terminating-series sum and of the identities the
// library uses. Instantiated for Rational (the public API) and for truncated
// Laurent series (generic-parameter replay of the moment derivation).

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selberg/error.hpp"

namespace selberg::detail {

template <class S>
concept HypScalar = requires(const S& x, const S& y) {
  S(std::int64_t{0});
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { x / y } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { is_zero(x) } -> std::same_as<bool>;
  { nonpositive_integer_order(x) } -> std::same_as<std::optional<std::uint64_t>>;
};

template <HypScalar S>
S rising(const S& x, std::uint64_t m) {
  S acc(std::int64_t{1});
  S factor = x;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (is_zero(factor)) return S(std::int64_t{0});
    acc = acc * factor;
    factor = factor + S(std::int64_t{1});
  }
  return acc;
}

template <HypScalar S>
std::optional<std::uint64_t> termination_order(std::span<const S> upper) {
  std::optional<std::uint64_t> order;
  for (const S& u : upper)
    if (auto n = nonpositive_integer_order(u); n && (!order || *n < *order)) order = n;
  return order;
}

/// Sum of the series up to its termination order. A lower parameter may be a
/// nonpositive integer as long as its Pochhammer symbol stays nonzero up to
/// that order.
template <HypScalar S>
S sum_terminating(std::span<const S> upper, std::span<const S> lower, const S& z) {
  const auto order = termination_order(upper);
  if (!order) throw Error(ErrorCode::NotTerminating, "no upper parameter is a nonpositive integer");

  const S one(std::int64_t{1});
  S term = one;
  S total = one;
  for (std::uint64_t m = 0; m < *order; ++m) {
    const S shift(static_cast<std::int64_t>(m));
    S num = z;
    for (const S& u : upper) num = num * (u + shift);
    S den(static_cast<std::int64_t>(m + 1));
    for (const S& l : lower) {
      const S factor = l + shift;
      if (is_zero(factor))
        throw Error(ErrorCode::SingularLowerParameter,
                    "lower parameter Pochhammer vanishes at m = " + std::to_string(m + 1) +
                        " before termination order " + std::to_string(*order));
      den = den * factor;
    }
    term = term * num / den;
    total = total + term;
  }
  return total;
}

template <class S>
struct WeightedParams {
  S coefficient;
  std::vector<S> upper;
  std::vector<S> lower;
  S argument;
};

/// Closed form of r-fold C14 on 4F3[A,B,C,D; E,F,G; z]: the leading
/// 4F3[A,B+r,C+r,D+r; E+r,F+r,G+r] with weight z^r (B)_r(C)_r(D)_r/((E)_r(F)_r(G)_r),
/// then for s = 0..r-1 the series 4F3[A-1,B+s,C+s,D+s; E+s,F+s,G+s] with
/// weight z^s (B)_s(C)_s(D)_s/((E)_s(F)_s(G)_s).
template <HypScalar S>
std::vector<WeightedParams<S>> contiguous_expansion(const S& a, const std::array<S, 3>& bcd,
                                                    const std::array<S, 3>& efg, const S& z,
                                                    std::uint64_t r) {
  const S one(std::int64_t{1});
  auto shifted = [&](const S& head, std::uint64_t s) {
    const S d(static_cast<std::int64_t>(s));
    WeightedParams<S> w{one, {head, bcd[0] + d, bcd[1] + d, bcd[2] + d},
                        {efg[0] + d, efg[1] + d, efg[2] + d}, z};
    return w;
  };

  std::vector<WeightedParams<S>> out;
  out.reserve(r + 1);
  out.push_back(shifted(a, r));

  S weight = one;
  const S a_minus_one = a - one;
  for (std::uint64_t s = 0; s <= r; ++s) {
    if (s < r) {
      auto piece = shifted(a_minus_one, s);
      piece.coefficient = weight;
      out.push_back(std::move(piece));
    } else {
      out.front().coefficient = weight;
      break;
    }
    const S d(static_cast<std::int64_t>(s));
    S den = (efg[0] + d) * (efg[1] + d) * (efg[2] + d);
    if (is_zero(den))
      throw Error(ErrorCode::ZeroDenominatorCoefficient,
                  "lower-parameter Pochhammer in the contiguous coefficient vanishes at s = " +
                      std::to_string(s + 1));
    weight = weight * z * (bcd[0] + d) * (bcd[1] + d) * (bcd[2] + d) / den;
  }
  return out;
}

/// Balanced 4F3 transformation for 4F3[A,B,C,-n; E,F,1+A+B+C-E-F-n; 1]:
/// prefactor (A)_n (E+F-A-B)_n (E+F-A-C)_n / ((E)_n (F)_n (E+F-A-B-C)_n)
/// times 4F3[-n, E-A, F-A, E+F-A-B-C; E+F-A-B, E+F-A-C, 1-A-n; 1].
template <HypScalar S>
WeightedParams<S> saalschutz_image(const S& a, const S& b, const S& c, std::uint64_t n,
                                   const S& e, const S& f) {
  const S one(std::int64_t{1});
  const S n_s(static_cast<std::int64_t>(n));
  const S efa = e + f - a;
  const S efabc = efa - b - c;

  const S den = rising(e, n) * rising(f, n) * rising(efabc, n);
  if (is_zero(den))
    throw Error(ErrorCode::ZeroPrefactorDenominator,
                "(E)_n (F)_n (E+F-A-B-C)_n vanishes in the balanced transformation");
  const S prefactor = rising(a, n) * rising(efa - b, n) * rising(efa - c, n) / den;

  return {prefactor, {-n_s, e - a, f - a, efabc}, {efa - b, efa - c, one - a - n_s}, one};
}

/// 2F1[A,-n; C; z] = z^n (C-A)_n/(C)_n 2F1[-n, 1-C-n; 1+A-C-n; -(1-z)/z].
template <HypScalar S>
WeightedParams<S> t2106_image(const S& a, std::uint64_t n, const S& c, const S& z) {
  if (is_zero(z)) throw Error(ErrorCode::ZeroArgument, "argument z must be nonzero");
  const S one(std::int64_t{1});
  const S n_s(static_cast<std::int64_t>(n));
  const S den = rising(c, n);
  if (is_zero(den)) throw Error(ErrorCode::ZeroPrefactorDenominator, "(C)_n vanishes");
  S zn = one;
  for (std::uint64_t i = 0; i < n; ++i) zn = zn * z;
  const S prefactor = zn * rising(c - a, n) / den;
  return {prefactor, {-n_s, one - c - n_s}, {one + a - c - n_s}, -(one - z) / z};
}

}  // namespace selberg::detail
