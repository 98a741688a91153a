#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

/// Growth rates of the joint limit N, a, b -> infinity with a = a1 N, b = b1 N.
struct LimitParams {
  Rational a1;
  Rational b1;
  std::uint64_t k = 1;

  /// Throws InvalidArgument unless a1 >= 0, b1 >= 0, k >= 1.
  void validate() const;
};

/// Double sum over m = 0..k-1, l = 0..k-m-1 of
///   (-1)^{k-m-1+l} C(k-1,m) C(k-m-1,l) (k+l-1)!(m+1)!/((k-1)!(m+l+1)!)
///   * a1^{k-m-l-1} (a1+1)^{m+l+1} (a1+b1+1)^l / (a1+b1+2)^{k+l}.
/// The powers of a1 are collected per term, so a1 = 0 is admissible.
Rational limit_theorem(const LimitParams& lp);

/// (1/k) sum_j (-1)^j C(k+j-1, j) (a1+1)^{j+1} / (a1+b1+2)^{k+j}
///        * sum_{i=0}^{k-j-1} C(k,i) C(k,i+j+1) (a1+1)^i.
Rational limit_corollary(const LimitParams& lp);

struct ConvergenceRow {
  std::uint64_t n = 0;
  Rational a;
  Rational b;
  Rational jk;
  Rational limit;
  Rational abs_error;
};

/// One row per N in `schedule`, with a = a1 N, b = b1 N and
/// jk = jk_sum(N, a, b, k). Rows are computed on up to `threads` workers
/// (0 = hardware concurrency) and returned in schedule order. Throws
/// InvalidSchedule when some (N, a, b) is not a valid moment parameter.
std::vector<ConvergenceRow> convergence_table(const LimitParams& lp,
                                              std::span<const std::uint64_t> schedule,
                                              unsigned threads = 0);

}  // namespace selberg
