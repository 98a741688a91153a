#include "selberg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "parallel.hpp"
#include "random.hpp"

namespace selberg {

namespace {

constexpr std::uint64_t kBlockSize = 1u << 14;

using Exponents = std::vector<std::uint32_t>;
using Polynomial = std::map<Exponents, mpz_class>;

// p * (x_i - x_j)
Polynomial times_difference(const Polynomial& p, std::size_t i, std::size_t j) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    Exponents ei = e;
    ++ei[i];
    out[ei] += c;
    Exponents ej = e;
    ++ej[j];
    out[ej] -= c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

struct BlockSums {
  std::uint64_t count = 0;
  double w = 0;
  double y = 0;
  double ww = 0;
  double yy = 0;
  double wy = 0;
};

}  // namespace

std::vector<MonomialTerm> vandermonde_sq_expand(std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
  if (n > kMaxExpansionVariables)
    throw Error(ErrorCode::TooLarge, "exact Vandermonde expansion is limited to N <= 5, got " +
                                         std::to_string(n));
  Polynomial poly;
  poly[Exponents(n, 0)] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      poly = times_difference(poly, i, j);
      poly = times_difference(poly, i, j);
    }

  std::vector<MonomialTerm> terms;
  terms.reserve(poly.size());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) terms.push_back({it->second, it->first});
  return terms;
}

Rational exact_oracle(const JkParams& p) {
  p.validate();
  const auto terms = vandermonde_sq_expand(p.n);

  const std::uint64_t max_degree = 2 * (p.n - 1) + p.k;
  std::vector<Rational> moment(max_degree + 1);
  const Rational ab = p.a + p.b;
  moment[0] = Rational(1);
  for (std::uint64_t m = 1; m <= max_degree; ++m)
    moment[m] = moment[m - 1] * (p.a + Rational(static_cast<std::int64_t>(m - 1))) /
                (ab + Rational(static_cast<std::int64_t>(m - 1)));

  Rational numerator;
  Rational denominator;
  for (const MonomialTerm& t : terms) {
    Rational rest(1);
    for (std::size_t i = 1; i < t.exponents.size(); ++i) rest *= moment[t.exponents[i]];
    const Rational c(t.coefficient);
    numerator += c * moment[t.exponents[0] + p.k] * rest;
    denominator += c * moment[t.exponents[0]] * rest;
  }
  if (denominator.is_zero())
    throw Error(ErrorCode::ZeroDenominator, "integral of the squared Vandermonde vanishes");
  return numerator / denominator;
}

McEstimate mc_oracle(const JkParams& p, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  p.validate();
  if (samples < 1000)
    throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs at least 1000 samples");

  const double a = p.a.to_double();
  const double b = p.b.to_double();
  const std::size_t n = p.n;
  const std::uint64_t k = p.k;
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;

  std::vector<BlockSums> sums(blocks);
  parallel_for(blocks, threads, [&](std::size_t block) {
    rng::VariateGenerator gen(rng::Xoshiro256::for_block(seed, block));
    const std::uint64_t count = std::min(kBlockSize, samples - block * kBlockSize);
    std::vector<double> x(n);
    BlockSums acc;
    acc.count = count;
    for (std::uint64_t s = 0; s < count; ++s) {
      for (double& xi : x) xi = gen.beta(a, b);
      double w = 1.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const double d = x[i] - x[j];
          w *= d * d;
        }
      double y = w;
      for (std::uint64_t e = 0; e < k; ++e) y *= x[0];
      acc.w += w;
      acc.y += y;
      acc.ww += w * w;
      acc.yy += y * y;
      acc.wy += w * y;
    }
    sums[block] = acc;
  });

  BlockSums total;
  for (const BlockSums& s : sums) {
    total.count += s.count;
    total.w += s.w;
    total.y += s.y;
    total.ww += s.ww;
    total.yy += s.yy;
    total.wy += s.wy;
  }
  if (total.w == 0.0)
    throw Error(ErrorCode::DegenerateWeights, "all sampled Vandermonde weights underflowed to zero");

  const double count = static_cast<double>(total.count);
  const double ratio = total.y / total.w;
  const double mean_w = total.w / count;
  // sum (y - R w)^2 = sum y^2 - 2R sum yw + R^2 sum w^2; the residuals have mean zero
  const double residual = total.yy - 2.0 * ratio * total.wy + ratio * ratio * total.ww;
  const double variance = std::max(residual, 0.0) / ((count - 1.0) * count * mean_w * mean_w);
  return {ratio, std::sqrt(variance), samples, seed};
}

}  // namespace selberg
