#include "selberg/selberg.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "selberg/asymptotics.hpp"
#include "selberg/identity_suites.hpp"
#include "selberg/moment.hpp"
#include "selberg/oracle.hpp"

struct sjk_rational {
  selberg::Rational value;
  std::string text;

  explicit sjk_rational(selberg::Rational v) : value(std::move(v)), text(value.str()) {}
};

struct sjk_convergence_table {
  std::vector<std::uint64_t> n;
  std::vector<std::unique_ptr<sjk_rational>> cells;  // five per row
};

namespace {

using selberg::Error;
using selberg::ErrorCode;

thread_local std::string last_error;

sjk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SJK_E_INVALID_ARGUMENT;
    case ErrorCode::Parse: return SJK_E_PARSE;
    case ErrorCode::DivisionByZero: return SJK_E_DIVISION_BY_ZERO;
    case ErrorCode::NotTerminating: return SJK_E_NOT_TERMINATING;
    case ErrorCode::SingularLowerParameter: return SJK_E_SINGULAR_LOWER_PARAMETER;
    case ErrorCode::ZeroDenominator: return SJK_E_ZERO_DENOMINATOR;
    case ErrorCode::ZeroDenominatorCoefficient: return SJK_E_ZERO_DENOMINATOR_COEFFICIENT;
    case ErrorCode::ZeroPrefactorDenominator: return SJK_E_ZERO_PREFACTOR_DENOMINATOR;
    case ErrorCode::ZeroArgument: return SJK_E_ZERO_ARGUMENT;
    case ErrorCode::NotBalanced: return SJK_E_NOT_BALANCED;
    case ErrorCode::RoleMismatch: return SJK_E_ROLE_MISMATCH;
    case ErrorCode::TooLarge: return SJK_E_TOO_LARGE;
    case ErrorCode::DegenerateWeights: return SJK_E_DEGENERATE_WEIGHTS;
    case ErrorCode::InvalidSchedule: return SJK_E_INVALID_SCHEDULE;
    case ErrorCode::PrecisionExhausted: return SJK_E_PRECISION_EXHAUSTED;
  }
  return SJK_E_INTERNAL;
}

sjk_status fail(sjk_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body() with the library's exceptions mapped onto status codes.
template <class Body>
sjk_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return SJK_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SJK_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SJK_E_INTERNAL, e.what());
  } catch (...) {
    return fail(SJK_E_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

selberg::JkParams jk_params(std::uint64_t n, const sjk_rational* a, const sjk_rational* b, std::uint64_t k) {
  require(a, "a");
  require(b, "b");
  return {n, a->value, b->value, k};
}

selberg::LimitParams limit_params(const sjk_rational* a1, const sjk_rational* b1, std::uint64_t k) {
  require(a1, "a1");
  require(b1, "b1");
  return {a1->value, b1->value, k};
}

void emit(selberg::Rational value, sjk_rational** out) {
  require(out, "out");
  *out = new sjk_rational(std::move(value));
}

}  // namespace

extern "C" {

const char* sjk_status_name(sjk_status status) {
  switch (status) {
    case SJK_OK: return "Ok";
    case SJK_E_INVALID_ARGUMENT: return "InvalidArgument";
    case SJK_E_PARSE: return "Parse";
    case SJK_E_DIVISION_BY_ZERO: return "DivisionByZero";
    case SJK_E_NOT_TERMINATING: return "NotTerminating";
    case SJK_E_SINGULAR_LOWER_PARAMETER: return "SingularLowerParameter";
    case SJK_E_ZERO_DENOMINATOR: return "ZeroDenominator";
    case SJK_E_ZERO_DENOMINATOR_COEFFICIENT: return "ZeroDenominatorCoefficient";
    case SJK_E_ZERO_PREFACTOR_DENOMINATOR: return "ZeroPrefactorDenominator";
    case SJK_E_ZERO_ARGUMENT: return "ZeroArgument";
    case SJK_E_NOT_BALANCED: return "NotBalanced";
    case SJK_E_ROLE_MISMATCH: return "RoleMismatch";
    case SJK_E_TOO_LARGE: return "TooLarge";
    case SJK_E_DEGENERATE_WEIGHTS: return "DegenerateWeights";
    case SJK_E_INVALID_SCHEDULE: return "InvalidSchedule";
    case SJK_E_PRECISION_EXHAUSTED: return "PrecisionExhausted";
    case SJK_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sjk_last_error(void) { return last_error.c_str(); }

const char* sjk_version(void) { return "1.0.0"; }

sjk_status sjk_rational_parse(const char* text, sjk_rational** out) {
  return guarded([&] {
    require(text, "text");
    emit(selberg::Rational::parse(text), out);
  });
}

sjk_status sjk_rational_from_ints(int64_t numerator, int64_t denominator, sjk_rational** out) {
  return guarded([&] { emit(selberg::Rational(numerator, denominator), out); });
}

sjk_rational* sjk_rational_clone(const sjk_rational* r) {
  if (!r) return nullptr;
  return new (std::nothrow) sjk_rational(r->value);
}

void sjk_rational_free(sjk_rational* r) { delete r; }

const char* sjk_rational_str(const sjk_rational* r) { return r ? r->text.c_str() : ""; }

sjk_status sjk_rational_decimal(const sjk_rational* r, unsigned digits, char* buffer, size_t capacity,
                                size_t* length) {
  return guarded([&] {
    require(r, "r");
    const std::string s = r->value.decimal(digits);
    if (length) *length = s.size();
    if (!buffer || capacity < s.size() + 1)
      throw Error(ErrorCode::InvalidArgument,
                  "buffer needs " + std::to_string(s.size() + 1) + " bytes");
    std::memcpy(buffer, s.c_str(), s.size() + 1);
  });
}

double sjk_rational_to_double(const sjk_rational* r) { return r ? r->value.to_double() : 0.0; }

int sjk_rational_compare(const sjk_rational* lhs, const sjk_rational* rhs) {
  const auto c = lhs->value <=> rhs->value;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

sjk_status sjk_jk(uint64_t n, const sjk_rational* a, const sjk_rational* b, uint64_t k,
                  sjk_jk_method method, sjk_rational** out) {
  return guarded([&] {
    const auto p = jk_params(n, a, b, k);
    switch (method) {
      case SJK_JK_SUM: emit(selberg::jk_sum(p), out); return;
      case SJK_JK_HYP: emit(selberg::jk_hyp(p), out); return;
      case SJK_JK_DERIVATION: emit(selberg::jk_via_derivation(p), out); return;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown jk method");
  });
}

sjk_status sjk_jk_derivation(uint64_t n, const sjk_rational* a, const sjk_rational* b, uint64_t k,
                             sjk_rational** out, sjk_derivation_info* info) {
  return guarded([&] {
    const auto trace = selberg::jk_derivation_trace(jk_params(n, a, b, k));
    if (info) {
      info->pieces = trace.pieces.size();
      info->unbalanced = 0;
      for (const auto& piece : trace.pieces)
        if (piece.balance != selberg::Rational(1)) ++info->unbalanced;
      info->generic_replay = trace.generic_replay ? 1 : 0;
      info->working_precision = trace.working_precision;
    }
    emit(trace.value, out);
  });
}

sjk_status sjk_jk_hyp_balance(uint64_t n, const sjk_rational* a, const sjk_rational* b, uint64_t k,
                              sjk_rational** out) {
  return guarded([&] { emit(selberg::balance(selberg::jk_hyp_series(jk_params(n, a, b, k))), out); });
}

sjk_status sjk_limit(const sjk_rational* a1, const sjk_rational* b1, uint64_t k, sjk_limit_method method,
                     sjk_rational** out) {
  return guarded([&] {
    const auto lp = limit_params(a1, b1, k);
    switch (method) {
      case SJK_LIMIT_THEOREM: emit(selberg::limit_theorem(lp), out); return;
      case SJK_LIMIT_COROLLARY: emit(selberg::limit_corollary(lp), out); return;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown limit method");
  });
}

sjk_status sjk_converge(const sjk_rational* a1, const sjk_rational* b1, uint64_t k, const uint64_t* schedule,
                        size_t schedule_length, unsigned threads, sjk_convergence_table** out) {
  return guarded([&] {
    require(out, "out");
    if (schedule_length > 0) require(schedule, "schedule");
    const std::span<const std::uint64_t> sched(schedule, schedule_length);
    const auto rows = selberg::convergence_table(limit_params(a1, b1, k), sched, threads);

    auto table = std::make_unique<sjk_convergence_table>();
    for (const auto& row : rows) {
      table->n.push_back(row.n);
      for (const selberg::Rational* v : {&row.a, &row.b, &row.jk, &row.limit, &row.abs_error})
        table->cells.push_back(std::make_unique<sjk_rational>(*v));
    }
    *out = table.release();
  });
}

size_t sjk_convergence_table_size(const sjk_convergence_table* table) { return table ? table->n.size() : 0; }

sjk_status sjk_convergence_table_row(const sjk_convergence_table* table, size_t index,
                                     sjk_convergence_row* row) {
  return guarded([&] {
    require(table, "table");
    require(row, "row");
    if (index >= table->n.size()) throw Error(ErrorCode::InvalidArgument, "row index out of range");
    const auto* cells = &table->cells[5 * index];
    *row = {table->n[index], cells[0].get(), cells[1].get(), cells[2].get(), cells[3].get(), cells[4].get()};
  });
}

void sjk_convergence_table_free(sjk_convergence_table* table) { delete table; }

const char* sjk_suite_name(sjk_suite suite) {
  switch (suite) {
    case SJK_SUITE_SAALSCHUTZ: return "saalschutz";
    case SJK_SUITE_CONTIGUOUS: return "contiguous";
    case SJK_SUITE_CHU: return "chu";
    case SJK_SUITE_T2106: return "t2106";
  }
  return "unknown";
}

sjk_status sjk_suite_parse(const char* name, sjk_suite* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto suite = selberg::parse_suite(name);
    if (!suite) throw Error(ErrorCode::InvalidArgument, std::string("unknown suite '") + name + "'");
    *out = static_cast<sjk_suite>(*suite);
  });
}

sjk_status sjk_verify(sjk_suite suite, uint64_t trials, uint64_t seed, sjk_suite_report* report) {
  std::string first_failure;
  const sjk_status status = guarded([&] {
    require(report, "report");
    if (suite < SJK_SUITE_SAALSCHUTZ || suite > SJK_SUITE_T2106)
      throw Error(ErrorCode::InvalidArgument, "unknown suite");
    const auto r = selberg::run_suite(static_cast<selberg::Suite>(suite), trials, seed);
    *report = {r.passed, r.failed, r.total()};
    if (!r.failures.empty()) first_failure = r.failures.front();
  });
  if (status == SJK_OK) last_error = first_failure;
  return status;
}

sjk_status sjk_exact_oracle(uint64_t n, const sjk_rational* a, const sjk_rational* b, uint64_t k,
                            sjk_rational** out) {
  return guarded([&] { emit(selberg::exact_oracle(jk_params(n, a, b, k)), out); });
}

sjk_status sjk_mc_oracle(uint64_t n, const sjk_rational* a, const sjk_rational* b, uint64_t k,
                         uint64_t samples, uint64_t seed, unsigned threads, sjk_mc_estimate* out) {
  return guarded([&] {
    require(out, "out");
    const auto est = selberg::mc_oracle(jk_params(n, a, b, k), samples, seed, threads);
    *out = {est.mean, est.std_error, est.samples, est.seed};
  });
}

}  // extern "C"
