#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg::detail {

/// Truncated Laurent series in a formal parameter eps with exact rational
/// coefficients, known modulo eps^precision().
///
/// Sums, differences and products of exact values stay exact (they are
/// Laurent polynomials). Division by anything other than an exact monomial
/// produces a truncated series carrying `working_precision` significant
/// coefficients; absolute precision is tracked through every operation, so a
/// coefficient is only reported when it is actually determined.
class Laurent {
public:
  static constexpr std::int64_t kExact = std::int64_t{1} << 40;

  Laurent(std::int64_t value) : Laurent(Rational(value)) {}  // NOLINT
  Laurent(const Rational& value);                             // NOLINT

  /// Exact c0 + c1*eps.
  static Laurent linear(const Rational& c0, const Rational& c1, int working_precision);

  bool exact() const { return prec_ >= kExact; }
  /// Order of the first stored (nonzero) coefficient; equals precision() for a
  /// series with no known nonzero coefficient.
  std::int64_t valuation() const { return val_; }
  std::int64_t precision() const { return prec_; }
  int working_precision() const { return work_; }

  /// Coefficient of eps^order. Throws PrecisionExhausted if order is at or
  /// beyond the known precision.
  Rational coefficient(std::int64_t order) const;

  /// Exactly zero (not merely zero to the known precision).
  bool is_exact_zero() const { return coeffs_.empty() && exact(); }
  /// True when no coefficient is known to be nonzero.
  bool is_indeterminate() const { return coeffs_.empty() && !exact(); }
  /// Exact and free of eps.
  bool is_constant() const {
    return exact() && (coeffs_.empty() || (val_ == 0 && coeffs_.size() == 1));
  }

  std::string str() const;

  friend Laurent operator+(const Laurent& x, const Laurent& y);
  friend Laurent operator-(const Laurent& x, const Laurent& y);
  friend Laurent operator*(const Laurent& x, const Laurent& y);
  friend Laurent operator/(const Laurent& x, const Laurent& y);
  Laurent operator-() const;

private:
  Laurent() = default;
  void normalize();
  Laurent inverse() const;

  std::int64_t val_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies eps^(val_ + i)
  std::int64_t prec_ = kExact;
  int work_ = 0;  // 0 means "not set"; inherited from operands
};

/// Exact zero test. Throws PrecisionExhausted when the value is zero only to
/// the known precision, since the answer is then undetermined.
bool is_zero(const Laurent& x);

/// n when x is exactly the constant -n.
std::optional<std::uint64_t> nonpositive_integer_order(const Laurent& x);

}  // namespace selberg::detail
