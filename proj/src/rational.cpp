#include "selberg/rational.hpp"

#include <cctype>
#include <utility>

namespace selberg {

namespace {

[[noreturn]] void parse_error(std::string_view text, const char* why) {
  throw Error(ErrorCode::Parse, "cannot parse rational '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) parse_error(text, "expected p/q with decimal integers");
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) parse_error(text, "zero denominator");
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) parse_error(text, "expected d.ddd");
    num.set_str(std::string(whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) parse_error(text, "not a number");
    num.set_str(std::string(body), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::optional<std::uint64_t> Rational::nonpositive_integer_order() const {
  if (!is_integer() || sgn(value_) > 0) return std::nullopt;
  const mpz_class n = -value_.get_num();
  if (!n.fits_ulong_p()) return std::nullopt;
  return n.get_ui();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(unsigned digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const mpz_class mag = abs(value_.get_num());
  // round(|p| * 10^d / q) with ties away from zero
  mpz_class scaled = (2 * mag * scale + value_.get_den()) / (2 * value_.get_den());

  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(value_) < 0 && scaled != 0) s.insert(0, "-");
  return s;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pochhammer(const Rational& x, std::uint64_t m) {
  mpq_class acc = 1;
  mpq_class factor = x.gmp();
  for (std::uint64_t i = 0; i < m; ++i) {
    if (sgn(factor) == 0) return Rational(0);
    acc *= factor;
    factor += 1;
  }
  return Rational(acc.get_num(), acc.get_den());
}

Rational binomial(std::int64_t n, std::int64_t j) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "binomial requires n >= 0");
  if (j < 0 || j > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return Rational(r);
}

Rational factorial(std::uint64_t m) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return Rational(r);
}

Rational power(const Rational& x, std::uint64_t e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace selberg
