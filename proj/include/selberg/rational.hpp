#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "selberg/error.hpp"

namespace selberg {

/// Exact rational number.
///
/// The value is always stored in lowest terms with a positive denominator, so
/// two Rationals compare equal exactly when their numerators and denominators
/// do. Division by zero throws Error(DivisionByZero).
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}

  /// Accepts "p", "p/q" and decimal literals such as "-0.25". Decimals are
  /// converted digit by digit, never through binary floating point.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& gmp() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// n such that the value equals -n, if it is a nonpositive integer.
  std::optional<std::uint64_t> nonpositive_integer_order() const;

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;
  /// Fixed-point rendering with `digits` digits after the point, rounded half
  /// away from zero.
  std::string decimal(unsigned digits) const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  Rational operator-() const;

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

Rational abs(const Rational& x);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline std::optional<std::uint64_t> nonpositive_integer_order(const Rational& x) {
  return x.nonpositive_integer_order();
}

/// Rising factorial x(x+1)...(x+m-1); (x)_0 = 1. A vanishing factor gives an
/// exact zero.
Rational pochhammer(const Rational& x, std::uint64_t m);

/// Binomial coefficient; zero when j < 0 or j > n. n must be nonnegative.
Rational binomial(std::int64_t n, std::int64_t j);

Rational factorial(std::uint64_t m);

/// x^e for e >= 0, with 0^0 = 1.
Rational power(const Rational& x, std::uint64_t e);

}  // namespace selberg
