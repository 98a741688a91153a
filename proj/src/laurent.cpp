#include "selberg/detail/laurent.hpp"

#include <algorithm>

namespace selberg::detail {

namespace {

constexpr int kDefaultWorkingPrecision = 16;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= Laurent::kExact || b >= Laurent::kExact) return Laurent::kExact;
  return a + b;
}

}  // namespace

Laurent::Laurent(const Rational& value) {
  if (!value.is_zero()) coeffs_.push_back(value);
}

Laurent Laurent::linear(const Rational& c0, const Rational& c1, int working_precision) {
  Laurent r;
  r.coeffs_ = {c0, c1};
  r.work_ = working_precision;
  r.normalize();
  return r;
}

void Laurent::normalize() {
  if (!exact() && static_cast<std::int64_t>(coeffs_.size()) > prec_ - val_)
    coeffs_.resize(static_cast<std::size_t>(std::max<std::int64_t>(prec_ - val_, 0)));
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  val_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) val_ = exact() ? 0 : prec_;
}

Rational Laurent::coefficient(std::int64_t order) const {
  if (order >= prec_)
    throw Error(ErrorCode::PrecisionExhausted,
                "coefficient of eps^" + std::to_string(order) + " is beyond the known precision " +
                    std::to_string(prec_));
  const std::int64_t i = order - val_;
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

std::string Laurent::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")*eps^" + std::to_string(val_ + static_cast<std::int64_t>(i));
  }
  if (out.empty()) out = "0";
  if (!exact()) out += " + O(eps^" + std::to_string(prec_) + ")";
  return out;
}

Laurent operator+(const Laurent& x, const Laurent& y) {
  Laurent r;
  r.work_ = std::max(x.work_, y.work_);
  r.prec_ = std::min(x.prec_, y.prec_);
  if (x.coeffs_.empty() && y.coeffs_.empty()) {
    r.normalize();
    return r;
  }

  std::int64_t lo = Laurent::kExact;
  std::int64_t hi = -Laurent::kExact;
  for (const Laurent* t : {&x, &y}) {
    if (t->coeffs_.empty()) continue;
    lo = std::min(lo, t->val_);
    hi = std::max(hi, t->val_ + static_cast<std::int64_t>(t->coeffs_.size()));
  }
  hi = std::min(hi, r.prec_);
  r.val_ = lo;
  if (hi > lo) {
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo), Rational(0));
    for (const Laurent* t : {&x, &y})
      for (std::size_t i = 0; i < t->coeffs_.size(); ++i) {
        const std::int64_t at = t->val_ + static_cast<std::int64_t>(i) - lo;
        if (at < hi - lo) r.coeffs_[static_cast<std::size_t>(at)] += t->coeffs_[i];
      }
  }
  r.normalize();
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }

Laurent operator*(const Laurent& x, const Laurent& y) {
  Laurent r;
  r.work_ = std::max(x.work_, y.work_);
  if (x.is_exact_zero() || y.is_exact_zero()) return r;

  r.prec_ = std::min(sat_add(x.prec_, y.val_), sat_add(y.prec_, x.val_));
  r.val_ = x.val_ + y.val_;
  if (!x.coeffs_.empty() && !y.coeffs_.empty()) {
    std::int64_t size = static_cast<std::int64_t>(x.coeffs_.size() + y.coeffs_.size() - 1);
    if (!r.exact()) size = std::min(size, r.prec_ - r.val_);
    if (size > 0) {
      r.coeffs_.assign(static_cast<std::size_t>(size), Rational(0));
      for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < y.coeffs_.size() && static_cast<std::int64_t>(i + j) < size; ++j)
          r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

Laurent Laurent::inverse() const {
  if (is_exact_zero()) throw Error(ErrorCode::DivisionByZero, "division by an exact zero series");
  if (coeffs_.empty())
    throw Error(ErrorCode::PrecisionExhausted, "division by a series with no known nonzero term");

  Laurent r;
  r.work_ = work_;
  r.val_ = -val_;
  if (exact() && coeffs_.size() == 1) {
    r.coeffs_ = {Rational(1) / coeffs_[0]};
    return r;
  }

  const std::int64_t rel = exact() ? (work_ > 0 ? work_ : kDefaultWorkingPrecision) : prec_ - val_;
  r.prec_ = -val_ + rel;
  const Rational inv0 = Rational(1) / coeffs_[0];
  r.coeffs_.reserve(static_cast<std::size_t>(rel));
  r.coeffs_.push_back(inv0);
  for (std::int64_t j = 1; j < rel; ++j) {
    Rational acc;
    const std::int64_t top = std::min<std::int64_t>(j, static_cast<std::int64_t>(coeffs_.size()) - 1);
    for (std::int64_t i = 1; i <= top; ++i)
      acc += coeffs_[static_cast<std::size_t>(i)] * r.coeffs_[static_cast<std::size_t>(j - i)];
    r.coeffs_.push_back(-acc * inv0);
  }
  r.normalize();
  return r;
}

Laurent operator/(const Laurent& x, const Laurent& y) { return x * y.inverse(); }

bool is_zero(const Laurent& x) {
  if (x.is_exact_zero()) return true;
  if (x.is_indeterminate())
    throw Error(ErrorCode::PrecisionExhausted, "zero test on a series known only to O(eps^" +
                                                   std::to_string(x.precision()) + ")");
  return false;
}

std::optional<std::uint64_t> nonpositive_integer_order(const Laurent& x) {
  if (!x.is_constant()) return std::nullopt;
  return x.coefficient(0).nonpositive_integer_order();
}

}  // namespace selberg::detail
