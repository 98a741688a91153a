#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "selberg/moment.hpp"
#include "selberg/rational.hpp"

namespace selberg {

/// c * x_1^{e_1} ... x_N^{e_N}
struct MonomialTerm {
  mpz_class coefficient;
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

inline constexpr std::uint64_t kMaxExpansionVariables = 5;

/// Collected expansion of prod_{i<j} (x_i - x_j)^2, terms in descending
/// lexicographic order of exponent vectors. Throws TooLarge for N > 5.
std::vector<MonomialTerm> vandermonde_sq_expand(std::uint64_t n);

/// J_k computed straight from its integral definition: expand the squared
/// Vandermonde, multiply by x_1^k and integrate each monomial against the
/// product Beta(a, b) weight, where a single coordinate contributes
/// E[x^m] = (a)_m / (a+b)_m. Needs N <= 5.
Rational exact_oracle(const JkParams& p);

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of J_k = E[x_1^k D] / E[D], D = prod_{i<j}(x_i - x_j)^2,
/// with x_1..x_N i.i.d. Beta(a, b). The 1/N! and Beta normalizations cancel in
/// the ratio. The standard error is the first-order delta-method error of the
/// ratio of sample means.
///
/// Samples are drawn in fixed-size blocks; block b uses its own xoshiro256**
/// stream seeded through SplitMix64 from (seed, b), and block sums are merged
/// in block order. The estimate is therefore bit-identical for any `threads`
/// (0 = hardware concurrency). Beta variates are X/(X+Y) with Marsaglia-Tsang
/// gamma variates (Box-Muller normals; shape < 1 via the U^{1/shape} boost).
///
/// Throws InvalidArgument for samples < 1000 and DegenerateWeights when every
/// sampled weight underflows to zero.
McEstimate mc_oracle(const JkParams& p, std::uint64_t samples, std::uint64_t seed,
                     unsigned threads = 0);

}  // namespace selberg
