/*
 * C interface to the selberg library.
 *
 * All functions return an sjk_status. On failure the output arguments are
 * left untouched and sjk_last_error() describes the failure on the calling
 * thread. Objects returned through `out` pointers are owned by the caller and
 * released with the matching *_free function.
 */
#ifndef SELBERG_SELBERG_H
#define SELBERG_SELBERG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SELBERG_BUILDING_LIBRARY)
#    define SJK_API __declspec(dllexport)
#  else
#    define SJK_API __declspec(dllimport)
#  endif
#else
#  define SJK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sjk_status {
  SJK_OK = 0,
  SJK_E_INVALID_ARGUMENT = 1,
  SJK_E_PARSE = 2,
  SJK_E_DIVISION_BY_ZERO = 3,
  SJK_E_NOT_TERMINATING = 4,
  SJK_E_SINGULAR_LOWER_PARAMETER = 5,
  SJK_E_ZERO_DENOMINATOR = 6,
  SJK_E_ZERO_DENOMINATOR_COEFFICIENT = 7,
  SJK_E_ZERO_PREFACTOR_DENOMINATOR = 8,
  SJK_E_ZERO_ARGUMENT = 9,
  SJK_E_NOT_BALANCED = 10,
  SJK_E_ROLE_MISMATCH = 11,
  SJK_E_TOO_LARGE = 12,
  SJK_E_DEGENERATE_WEIGHTS = 13,
  SJK_E_INVALID_SCHEDULE = 14,
  SJK_E_PRECISION_EXHAUSTED = 15,
  SJK_E_INTERNAL = 99
} sjk_status;

/* Symbolic name of a status, e.g. "SingularLowerParameter". */
SJK_API const char* sjk_status_name(sjk_status status);
/* Message of the last failure on this thread; empty after a success. */
SJK_API const char* sjk_last_error(void);
SJK_API const char* sjk_version(void);

/* ---- exact rationals ---------------------------------------------------- */

typedef struct sjk_rational sjk_rational;

/* "p", "p/q" or a decimal literal like "-0.25" (converted exactly). */
SJK_API sjk_status sjk_rational_parse(const char* text, sjk_rational** out);
SJK_API sjk_status sjk_rational_from_ints(int64_t numerator, int64_t denominator, sjk_rational** out);
SJK_API sjk_rational* sjk_rational_clone(const sjk_rational* r);
SJK_API void sjk_rational_free(sjk_rational* r);
/* Canonical "p/q" ("p" for integers). Owned by the handle. */
SJK_API const char* sjk_rational_str(const sjk_rational* r);
/* Fixed-point rendering with `digits` fractional digits, rounded half away
 * from zero. Writes at most `capacity` bytes including the terminator and
 * stores the full length (without terminator) in *length. Returns
 * SJK_E_INVALID_ARGUMENT if the buffer is too small. */
SJK_API sjk_status sjk_rational_decimal(const sjk_rational* r, unsigned digits, char* buffer,
                                        size_t capacity, size_t* length);
SJK_API double sjk_rational_to_double(const sjk_rational* r);
/* -1, 0 or 1. */
SJK_API int sjk_rational_compare(const sjk_rational* lhs, const sjk_rational* rhs);

/* ---- moment ratio J_k ---------------------------------------------------- */

typedef enum sjk_jk_method {
  SJK_JK_SUM = 0,        /* finite alternating sum */
  SJK_JK_HYP = 1,        /* prefactor times a terminating 4F3 */
  SJK_JK_DERIVATION = 2  /* contiguous decompositions + balanced transformation */
} sjk_jk_method;

SJK_API sjk_status sjk_jk(uint64_t n, const sjk_rational* a, const sjk_rational* b, uint64_t k,
                          sjk_jk_method method, sjk_rational** out);

typedef struct sjk_derivation_info {
  uint64_t pieces;           /* number of balanced pieces transformed */
  uint64_t unbalanced;       /* pieces whose balance was not exactly 1 */
  int generic_replay;        /* 1 if the a+eps replay was needed */
  int working_precision;     /* Laurent working precision of the replay */
} sjk_derivation_info;

/* jk by the derivation route, plus bookkeeping about the pipeline. */
SJK_API sjk_status sjk_jk_derivation(uint64_t n, const sjk_rational* a, const sjk_rational* b,
                                     uint64_t k, sjk_rational** out, sjk_derivation_info* info);

/* Balance of the 4F3 in the hypergeometric form (k >= 1). */
SJK_API sjk_status sjk_jk_hyp_balance(uint64_t n, const sjk_rational* a, const sjk_rational* b,
                                      uint64_t k, sjk_rational** out);

/* ---- limits -------------------------------------------------------------- */

typedef enum sjk_limit_method { SJK_LIMIT_THEOREM = 0, SJK_LIMIT_COROLLARY = 1 } sjk_limit_method;

SJK_API sjk_status sjk_limit(const sjk_rational* a1, const sjk_rational* b1, uint64_t k,
                             sjk_limit_method method, sjk_rational** out);

typedef struct sjk_convergence_table sjk_convergence_table;

typedef struct sjk_convergence_row {
  uint64_t n;
  const sjk_rational* a; /* borrowed from the table */
  const sjk_rational* b;
  const sjk_rational* jk;
  const sjk_rational* limit;
  const sjk_rational* abs_error;
} sjk_convergence_row;

/* threads = 0 uses the hardware concurrency. */
SJK_API sjk_status sjk_converge(const sjk_rational* a1, const sjk_rational* b1, uint64_t k,
                                const uint64_t* schedule, size_t schedule_length, unsigned threads,
                                sjk_convergence_table** out);
SJK_API size_t sjk_convergence_table_size(const sjk_convergence_table* table);
SJK_API sjk_status sjk_convergence_table_row(const sjk_convergence_table* table, size_t index,
                                             sjk_convergence_row* row);
SJK_API void sjk_convergence_table_free(sjk_convergence_table* table);

/* ---- identity suites ----------------------------------------------------- */

typedef enum sjk_suite {
  SJK_SUITE_SAALSCHUTZ = 0,
  SJK_SUITE_CONTIGUOUS = 1,
  SJK_SUITE_CHU = 2,
  SJK_SUITE_T2106 = 3
} sjk_suite;

/* "saalschutz", "contiguous", "chu", "t2106". */
SJK_API const char* sjk_suite_name(sjk_suite suite);
SJK_API sjk_status sjk_suite_parse(const char* name, sjk_suite* out);

typedef struct sjk_suite_report {
  uint64_t passed;
  uint64_t failed;
  uint64_t total;
} sjk_suite_report;

/* Failing instances are not an error: inspect report->failed. The first
 * failure description, if any, is available from sjk_last_error(). */
SJK_API sjk_status sjk_verify(sjk_suite suite, uint64_t trials, uint64_t seed, sjk_suite_report* report);

/* ---- oracles ------------------------------------------------------------- */

SJK_API sjk_status sjk_exact_oracle(uint64_t n, const sjk_rational* a, const sjk_rational* b,
                                    uint64_t k, sjk_rational** out);

typedef struct sjk_mc_estimate {
  double mean;
  double std_error;
  uint64_t samples;
  uint64_t seed;
} sjk_mc_estimate;

SJK_API sjk_status sjk_mc_oracle(uint64_t n, const sjk_rational* a, const sjk_rational* b, uint64_t k,
                                 uint64_t samples, uint64_t seed, unsigned threads,
                                 sjk_mc_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* SELBERG_SELBERG_H */
