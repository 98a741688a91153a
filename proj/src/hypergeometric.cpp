#include "selberg/hypergeometric.hpp"

#include <algorithm>
#include <array>

#include "selberg/detail/hyp_kernels.hpp"

namespace selberg {

namespace {

HypSeries from_params(detail::WeightedParams<Rational>&& w) {
  return HypSeries(std::move(w.upper), std::move(w.lower), std::move(w.argument));
}

// Removes one occurrence of each role value from `pool`; false if a role is
// not present.
bool take_roles(std::vector<Rational> pool, std::span<const Rational> roles,
                std::vector<Rational>* rest = nullptr) {
  for (const Rational& r : roles) {
    auto it = std::find(pool.begin(), pool.end(), r);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  if (rest) *rest = std::move(pool);
  return true;
}

[[noreturn]] void role_mismatch(const HypSeries& s, const std::string& what) {
  throw Error(ErrorCode::RoleMismatch, what + " does not match " + s.str());
}

}  // namespace

HypSeries::HypSeries(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument)
    : upper_(std::move(upper)), lower_(std::move(lower)), argument_(std::move(argument)) {
  std::sort(upper_.begin(), upper_.end());
  std::sort(lower_.begin(), lower_.end());
}

std::optional<std::uint64_t> HypSeries::termination_order() const {
  return detail::termination_order<Rational>(upper_);
}

std::string HypSeries::str() const {
  std::string out = std::to_string(p()) + "F" + std::to_string(q()) + "[";
  auto append = [&out](std::span<const Rational> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      out += xs[i].str();
    }
  };
  append(upper_);
  out += "; ";
  append(lower_);
  out += "; " + argument_.str() + "]";
  return out;
}

std::strong_ordering operator<=>(const HypSeries& lhs, const HypSeries& rhs) {
  if (auto c = std::lexicographical_compare_three_way(lhs.upper_.begin(), lhs.upper_.end(),
                                                      rhs.upper_.begin(), rhs.upper_.end());
      c != 0)
    return c;
  if (auto c = std::lexicographical_compare_three_way(lhs.lower_.begin(), lhs.lower_.end(),
                                                      rhs.lower_.begin(), rhs.lower_.end());
      c != 0)
    return c;
  return lhs.argument_ <=> rhs.argument_;
}

Rational eval_terminating(const HypSeries& s) {
  return detail::sum_terminating<Rational>(s.upper(), s.lower(), s.argument());
}

Rational balance(const HypSeries& s) {
  Rational acc;
  for (const Rational& l : s.lower()) acc += l;
  for (const Rational& u : s.upper()) acc -= u;
  return acc;
}

std::vector<WeightedSeries> contiguous_decompose(const HypSeries& s, const Rational& unshifted,
                                                 std::uint64_t r) {
  if (s.p() != 4 || s.q() != 3)
    throw Error(ErrorCode::InvalidArgument, "contiguous_decompose expects a 4F3, got " + s.str());
  std::vector<Rational> rest;
  if (!take_roles({s.upper().begin(), s.upper().end()}, std::span(&unshifted, 1), &rest))
    role_mismatch(s, "unshifted parameter " + unshifted.str());

  const std::array<Rational, 3> bcd{rest[0], rest[1], rest[2]};
  const std::array<Rational, 3> efg{s.lower()[0], s.lower()[1], s.lower()[2]};
  auto pieces = detail::contiguous_expansion<Rational>(unshifted, bcd, efg, s.argument(), r);

  std::vector<WeightedSeries> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    Rational c = p.coefficient;
    out.push_back({std::move(c), from_params(std::move(p))});
  }
  return out;
}

WeightedSeries transform_saalschutz(const HypSeries& s, const SaalschutzRoles& roles) {
  if (s.p() != 4 || s.q() != 3 || s.argument() != Rational(1))
    throw Error(ErrorCode::InvalidArgument,
                "balanced transformation expects a 4F3 at argument 1, got " + s.str());
  if (!s.is_terminating()) throw Error(ErrorCode::NotTerminating, s.str() + " does not terminate");
  if (balance(s) != Rational(1))
    throw Error(ErrorCode::NotBalanced,
                s.str() + " has balance " + balance(s).str() + ", transformation needs 1");

  const Rational minus_n(-static_cast<std::int64_t>(roles.n));
  const std::array<Rational, 4> up{roles.a, roles.b, roles.c, minus_n};
  if (!take_roles({s.upper().begin(), s.upper().end()}, up)) role_mismatch(s, "upper roles");
  const std::array<Rational, 2> lo{roles.e, roles.f};
  if (!take_roles({s.lower().begin(), s.lower().end()}, lo)) role_mismatch(s, "lower roles");

  auto image = detail::saalschutz_image<Rational>(roles.a, roles.b, roles.c, roles.n, roles.e,
                                                  roles.f);
  Rational prefactor = image.coefficient;
  return {std::move(prefactor), from_params(std::move(image))};
}

WeightedSeries transform_2f1_t2106(const HypSeries& s, const T2106Roles& roles) {
  if (s.p() != 2 || s.q() != 1)
    throw Error(ErrorCode::InvalidArgument, "T2106 expects a 2F1, got " + s.str());
  const std::array<Rational, 2> up{roles.a, Rational(-static_cast<std::int64_t>(roles.n))};
  if (!take_roles({s.upper().begin(), s.upper().end()}, up) || s.lower()[0] != roles.c)
    role_mismatch(s, "roles (A, -n, C)");

  auto image = detail::t2106_image<Rational>(roles.a, roles.n, roles.c, s.argument());
  Rational prefactor = image.coefficient;
  return {std::move(prefactor), from_params(std::move(image))};
}

Rational chu_vandermonde(const Rational& a, std::uint64_t n, const Rational& c) {
  const Rational den = pochhammer(c, n);
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "(C)_n vanishes in Chu-Vandermonde");
  return pochhammer(c - a, n) / den;
}

}  // namespace selberg
