#pragma once

#include <cstdint>
#include <vector>

#include "selberg/hypergeometric.hpp"
#include "selberg/rational.hpp"

namespace selberg {

/// Parameters of the moment ratio J_k = S_k(a,b) / S_0(a,b), where
///
///   S_k(a,b) = 1/N! \int_{[0,1]^N} x_1^k \prod_{i<j} (x_i - x_j)^2
///              \prod_i x_i^{a-1} (1 - x_i)^{b-1} dx_i.
struct JkParams {
  std::uint64_t n = 1;  ///< number of variables N >= 1
  Rational a{1};        ///< a > 0
  Rational b{1};        ///< b > 0
  std::uint64_t k = 0;  ///< moment order

  /// Throws InvalidArgument unless N >= 1, a > 0, b > 0.
  void validate() const;
};

/// Finite alternating sum
///
///   J_k = 1/(N k!) sum_i (-1)^i C(k-1, i) (N-i)_k (a+N-i-1)_k / (a+b+2N-i-2)_k.
///
/// Terms with i >= N carry the factor (N-i)_k = 0 and are skipped, which keeps
/// the evaluation total for all valid parameters. J_0 = 1.
Rational jk_sum(const JkParams& p);

/// Prefactor (N+1)_{k-1} (a+N-1)_k / (k! (2N+a+b-2)_k) of the 4F3 form.
Rational jk_hyp_prefactor(const JkParams& p);

/// 4F3[1-N, 1-k, 2-a-N, 3-a-b-k-2N; 2-a-k-N, 1-k-N, 3-a-b-2N; 1], a
/// (-1)-balanced terminating series. Requires k >= 1.
HypSeries jk_hyp_series(const JkParams& p);

/// Prefactor times the 4F3 value. Throws SingularLowerParameter on a
/// degenerate rational coincidence of the parameters. J_0 = 1.
Rational jk_hyp(const JkParams& p);

struct DerivationPiece {
  std::uint64_t s = 0;  ///< index of the first contiguous decomposition
  std::uint64_t t = 0;  ///< index of the second
  Rational balance;     ///< balance of the 4F3 handed to the balanced transformation
};

struct DerivationTrace {
  Rational value;
  /// False when the exact-rational pipeline went through. True when it hit a
  /// 0/0 coincidence and the value was obtained by replaying the same pipeline
  /// at a+eps over Laurent series and taking the exact eps^0 coefficient.
  bool generic_replay = false;
  int working_precision = 0;  ///< Laurent working precision used by the replay
  std::vector<DerivationPiece> pieces;
};

/// Replays the hypergeometric derivation of J_k: the contiguous
/// decomposition with r = k-1 applied to the 4F3 form (unshifted parameter
/// 1-N), a second decomposition with r = k-s-1 on every piece (unshifted
/// parameter -N), then the balanced transformation on every resulting series,
/// which must have balance exactly 1 (NotBalanced otherwise).
DerivationTrace jk_derivation_trace(const JkParams& p);

inline Rational jk_via_derivation(const JkParams& p) { return jk_derivation_trace(p).value; }

}  // namespace selberg
