#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selberg/hypergeometric.hpp"

namespace selberg {

/// Randomized exact checks of the hypergeometric identities.
enum class Suite { Saalschutz, Contiguous, ChuVandermonde, T2106 };

inline constexpr Suite kAllSuites[] = {Suite::Saalschutz, Suite::Contiguous, Suite::ChuVandermonde,
                                       Suite::T2106};

std::string_view to_string(Suite suite) noexcept;
/// "saalschutz", "contiguous", "chu", "t2106"
std::optional<Suite> parse_suite(std::string_view name) noexcept;

struct SuiteReport {
  Suite suite = Suite::Saalschutz;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  ///< the first few failing instances

  std::uint64_t total() const { return passed + failed; }
};

/// Runs `trials` random instances. Instances whose preconditions fail (a
/// vanishing lower Pochhammer symbol up to the designated termination order,
/// a zero prefactor denominator) are redrawn and not counted. Deterministic in
/// (suite, trials, seed).
///
/// - Saalschutz: 4F3[A,B,C,-n; E,F,1+A+B+C-E-F-n; 1] against its balanced
///   transformation; the image must be 1-balanced and keep -n.
/// - Contiguous: 4F3[-n,B,C,D; E,F,G; z] with r = trial mod 5; the weighted
///   pieces must sum to the input, and the closed-form expansion must equal the
///   r-fold C14 iteration term for term.
/// - ChuVandermonde: closed form against term summation of 2F1[A,-n; C; 1].
/// - T2106: both sides of the 2F1 transformation evaluated directly.
SuiteReport run_suite(Suite suite, std::uint64_t trials, std::uint64_t seed);

/// Applies the r = 1 contiguous relation C14 r times to the leading term,
/// starting from (1, s). Returned in the same order as contiguous_decompose:
/// the leading term first, then the A-1 terms in the order they were split
/// off. Reference route for contiguous_decompose.
std::vector<WeightedSeries> c14_iterate(const HypSeries& s, const Rational& unshifted,
                                        std::uint64_t r);

}  // namespace selberg
