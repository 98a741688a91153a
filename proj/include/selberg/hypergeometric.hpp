#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

/// Generalized hypergeometric series pFq[upper; lower; z] with rational data.
///
/// Parameter lists are kept sorted, so two series with the same parameter
/// multisets and argument compare equal. Equality is structural; use
/// eval_terminating to compare values.
class HypSeries {
public:
  HypSeries(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument);

  std::span<const Rational> upper() const { return upper_; }
  std::span<const Rational> lower() const { return lower_; }
  const Rational& argument() const { return argument_; }
  std::size_t p() const { return upper_.size(); }
  std::size_t q() const { return lower_.size(); }

  /// Smallest n such that -n is an upper parameter.
  std::optional<std::uint64_t> termination_order() const;
  bool is_terminating() const { return termination_order().has_value(); }

  /// "4F3[-1, -1, -1, -5; -3, -3, -3; 1]"
  std::string str() const;

  friend bool operator==(const HypSeries&, const HypSeries&) = default;
  friend std::strong_ordering operator<=>(const HypSeries& lhs, const HypSeries& rhs);

private:
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
  Rational argument_;
};

struct WeightedSeries {
  Rational coefficient;
  HypSeries series;

  friend bool operator==(const WeightedSeries&, const WeightedSeries&) = default;
};

/// Exact finite sum of a terminating series.
///
/// Throws NotTerminating when no upper parameter is a nonpositive integer and
/// SingularLowerParameter when a lower Pochhammer symbol vanishes before the
/// termination order is reached.
Rational eval_terminating(const HypSeries& s);

/// Sum of lower parameters minus sum of upper parameters.
Rational balance(const HypSeries& s);

/// Iterated contiguous relation for a 4F3. `unshifted` designates the upper
/// parameter playing the role A; the remaining three are shifted together
/// with all lower parameters. Returns the leading term first, then the r terms
/// carrying A-1 in order s = 0..r-1. Throws ZeroDenominatorCoefficient.
std::vector<WeightedSeries> contiguous_decompose(const HypSeries& s, const Rational& unshifted,
                                                 std::uint64_t r);

/// Role assignment for the balanced 4F3 transformation: the series must be
/// 4F3[A, B, C, -n; E, F, 1+A+B+C-E-F-n; 1].
struct SaalschutzRoles {
  Rational a;
  Rational b;
  Rational c;
  std::uint64_t n = 0;
  Rational e;
  Rational f;
};

/// Returns (prefactor, transformed series) with prefactor * eval(series) =
/// eval(s). Throws NotTerminating, NotBalanced, RoleMismatch,
/// ZeroPrefactorDenominator.
WeightedSeries transform_saalschutz(const HypSeries& s, const SaalschutzRoles& roles);

struct T2106Roles {
  Rational a;
  std::uint64_t n = 0;
  Rational c;
};

/// 2F1[A, -n; C; z] -> z^n (C-A)_n/(C)_n 2F1[-n, 1-C-n; 1+A-C-n; -(1-z)/z].
/// Throws ZeroArgument, ZeroPrefactorDenominator, RoleMismatch.
WeightedSeries transform_2f1_t2106(const HypSeries& s, const T2106Roles& roles);

/// (C-A)_n / (C)_n, the value of 2F1[A, -n; C; 1]. Throws ZeroDenominator.
Rational chu_vandermonde(const Rational& a, std::uint64_t n, const Rational& c);

}  // namespace selberg
