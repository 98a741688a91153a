// selberg-jk: command-line front end over the C interface of libselberg.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "selberg/selberg.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitContract = 2;
constexpr int kExitVerification = 3;

struct Failure {
  int exit_code;
  std::string code;
  std::string message;
};

int exit_code_for(sjk_status status) {
  switch (status) {
    case SJK_E_PARSE:
    case SJK_E_INVALID_ARGUMENT:
    case SJK_E_INVALID_SCHEDULE:
    case SJK_E_TOO_LARGE:
      return kExitUsage;
    default:
      return kExitContract;
  }
}

void check(sjk_status status) {
  if (status != SJK_OK) throw Failure{exit_code_for(status), sjk_status_name(status), sjk_last_error()};
}

struct RationalDeleter {
  void operator()(sjk_rational* r) const { sjk_rational_free(r); }
};
using Rational = std::unique_ptr<sjk_rational, RationalDeleter>;

Rational parse_rational(const std::string& text, const std::string& flag) {
  sjk_rational* r = nullptr;
  const sjk_status status = sjk_rational_parse(text.c_str(), &r);
  if (status != SJK_OK)
    throw Failure{kExitUsage, sjk_status_name(status), flag + ": " + sjk_last_error()};
  return Rational(r);
}

std::string str(const sjk_rational* r) { return sjk_rational_str(r); }

std::string decimal(const sjk_rational* r, unsigned digits) {
  size_t length = 0;
  sjk_rational_decimal(r, digits, nullptr, 0, &length);
  std::string out(length + 1, '\0');
  check(sjk_rational_decimal(r, digits, out.data(), out.size(), &length));
  out.resize(length);
  return out;
}

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

enum class Format { Plain, Csv, Json };

struct Common {
  std::string format = "plain";
  std::string output;
  int digits = -1;
  unsigned threads = 0;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Plain;
  }
  bool want_decimal() const { return digits >= 0; }
};

struct Report {
  std::ostringstream out;
  int exit_code = 0;
};

// ---- jk ---------------------------------------------------------------------

struct JkArgs {
  std::uint64_t n = 0;
  std::string a, b;
  std::uint64_t k = 0;
  std::string method = "all";
};

void run_jk(const JkArgs& args, const Common& common, Report& rep) {
  const Rational a = parse_rational(args.a, "--a");
  const Rational b = parse_rational(args.b, "--b");

  std::vector<std::pair<std::string, sjk_jk_method>> methods;
  if (args.method == "sum" || args.method == "all") methods.emplace_back("sum", SJK_JK_SUM);
  if (args.method == "hyp" || args.method == "all") methods.emplace_back("hyp", SJK_JK_HYP);
  if (args.method == "derivation" || args.method == "all")
    methods.emplace_back("derivation", SJK_JK_DERIVATION);

  std::vector<std::pair<std::string, Rational>> values;
  for (const auto& [name, method] : methods) {
    sjk_rational* v = nullptr;
    check(sjk_jk(args.n, a.get(), b.get(), args.k, method, &v));
    values.emplace_back(name, Rational(v));
  }

  std::string agreement;
  if (values.size() > 1) {
    agreement = "ok";
    for (const auto& v : values)
      if (sjk_rational_compare(v.second.get(), values.front().second.get()) != 0) agreement = "mismatch";
    if (agreement != "ok") rep.exit_code = kExitVerification;
  }

  auto dec = [&](const sjk_rational* r) { return common.want_decimal() ? decimal(r, common.digits) : ""; };
  switch (common.fmt()) {
    case Format::Plain:
      rep.out << "N=" << args.n << " a=" << str(a.get()) << " b=" << str(b.get()) << " k=" << args.k << "\n";
      for (const auto& [name, v] : values) {
        rep.out << name << " " << str(v.get());
        if (common.want_decimal()) rep.out << " " << dec(v.get());
        rep.out << "\n";
      }
      if (!agreement.empty()) rep.out << "agreement " << agreement << "\n";
      break;
    case Format::Csv:
      rep.out << "N,a,b,k,method,value,decimal,agreement\n";
      for (const auto& [name, v] : values)
        rep.out << args.n << "," << str(a.get()) << "," << str(b.get()) << "," << args.k << "," << name << ","
                << str(v.get()) << "," << dec(v.get()) << "," << agreement << "\n";
      break;
    case Format::Json: {
      json j{{"command", "jk"}, {"N", args.n}, {"a", str(a.get())}, {"b", str(b.get())}, {"k", args.k}};
      json results = json::array();
      for (const auto& [name, v] : values) {
        json r{{"method", name}, {"value", str(v.get())}};
        if (common.want_decimal()) r["decimal"] = dec(v.get());
        results.push_back(std::move(r));
      }
      j["results"] = std::move(results);
      j["agreement"] = agreement.empty() ? json(nullptr) : json(agreement);
      rep.out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---- limit ------------------------------------------------------------------

struct LimitArgs {
  std::string a1, b1;
  std::uint64_t k = 0;
  std::string method = "both";
};

void run_limit(const LimitArgs& args, const Common& common, Report& rep) {
  const Rational a1 = parse_rational(args.a1, "--a1");
  const Rational b1 = parse_rational(args.b1, "--b1");

  std::vector<std::pair<std::string, sjk_limit_method>> methods;
  if (args.method == "theorem" || args.method == "both") methods.emplace_back("theorem", SJK_LIMIT_THEOREM);
  if (args.method == "corollary" || args.method == "both")
    methods.emplace_back("corollary", SJK_LIMIT_COROLLARY);

  std::vector<std::pair<std::string, Rational>> values;
  for (const auto& [name, method] : methods) {
    sjk_rational* v = nullptr;
    check(sjk_limit(a1.get(), b1.get(), args.k, method, &v));
    values.emplace_back(name, Rational(v));
  }
  std::string agreement;
  if (values.size() > 1) {
    agreement = sjk_rational_compare(values[0].second.get(), values[1].second.get()) == 0 ? "ok" : "mismatch";
    if (agreement != "ok") rep.exit_code = kExitVerification;
  }

  auto dec = [&](const sjk_rational* r) { return common.want_decimal() ? decimal(r, common.digits) : ""; };
  switch (common.fmt()) {
    case Format::Plain:
      rep.out << "a1=" << str(a1.get()) << " b1=" << str(b1.get()) << " k=" << args.k << "\n";
      for (const auto& [name, v] : values) {
        rep.out << name << " " << str(v.get());
        if (common.want_decimal()) rep.out << " " << dec(v.get());
        rep.out << "\n";
      }
      if (!agreement.empty()) rep.out << "agreement " << agreement << "\n";
      break;
    case Format::Csv:
      rep.out << "a1,b1,k,method,value,decimal,agreement\n";
      for (const auto& [name, v] : values)
        rep.out << str(a1.get()) << "," << str(b1.get()) << "," << args.k << "," << name << "," << str(v.get())
                << "," << dec(v.get()) << "," << agreement << "\n";
      break;
    case Format::Json: {
      json j{{"command", "limit"}, {"a1", str(a1.get())}, {"b1", str(b1.get())}, {"k", args.k}};
      json results = json::array();
      for (const auto& [name, v] : values) {
        json r{{"method", name}, {"value", str(v.get())}};
        if (common.want_decimal()) r["decimal"] = dec(v.get());
        results.push_back(std::move(r));
      }
      j["results"] = std::move(results);
      j["agreement"] = agreement.empty() ? json(nullptr) : json(agreement);
      rep.out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---- converge ---------------------------------------------------------------

struct ConvergeArgs {
  std::string a1, b1;
  std::uint64_t k = 0;
  std::vector<std::uint64_t> schedule;
};

void run_converge(const ConvergeArgs& args, const Common& common, Report& rep) {
  const Rational a1 = parse_rational(args.a1, "--a1");
  const Rational b1 = parse_rational(args.b1, "--b1");

  sjk_convergence_table* raw = nullptr;
  check(sjk_converge(a1.get(), b1.get(), args.k, args.schedule.data(), args.schedule.size(), common.threads,
                     &raw));
  std::unique_ptr<sjk_convergence_table, decltype(&sjk_convergence_table_free)> table(
      raw, &sjk_convergence_table_free);

  std::vector<sjk_convergence_row> rows(sjk_convergence_table_size(table.get()));
  for (size_t i = 0; i < rows.size(); ++i) check(sjk_convergence_table_row(table.get(), i, &rows[i]));

  switch (common.fmt()) {
    case Format::Plain:
      rep.out << "a1=" << str(a1.get()) << " b1=" << str(b1.get()) << " k=" << args.k << "\n";
      for (const auto& r : rows) {
        rep.out << "N=" << r.n << " a=" << str(r.a) << " b=" << str(r.b) << " jk=" << str(r.jk)
                << " limit=" << str(r.limit) << " abs_error=" << str(r.abs_error);
        if (common.want_decimal()) rep.out << " (" << decimal(r.abs_error, common.digits) << ")";
        rep.out << "\n";
      }
      break;
    case Format::Csv:
      rep.out << "N,a,b,jk,limit,abs_error\n";
      for (const auto& r : rows)
        rep.out << r.n << "," << str(r.a) << "," << str(r.b) << "," << str(r.jk) << "," << str(r.limit) << ","
                << str(r.abs_error) << "\n";
      break;
    case Format::Json: {
      json j{{"command", "converge"}, {"a1", str(a1.get())}, {"b1", str(b1.get())}, {"k", args.k}};
      json out_rows = json::array();
      for (const auto& r : rows)
        out_rows.push_back({{"N", r.n},
                            {"a", str(r.a)},
                            {"b", str(r.b)},
                            {"jk", str(r.jk)},
                            {"limit", str(r.limit)},
                            {"abs_error", str(r.abs_error)}});
      j["rows"] = std::move(out_rows);
      rep.out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
};

void run_verify(const VerifyArgs& args, const Common& common, Report& rep) {
  std::vector<sjk_suite> suites;
  if (args.suite == "all") {
    suites = {SJK_SUITE_SAALSCHUTZ, SJK_SUITE_CONTIGUOUS, SJK_SUITE_CHU, SJK_SUITE_T2106};
  } else {
    sjk_suite s;
    const sjk_status status = sjk_suite_parse(args.suite.c_str(), &s);
    if (status != SJK_OK) throw Failure{kExitUsage, sjk_status_name(status), sjk_last_error()};
    suites.push_back(s);
  }

  struct Row {
    sjk_suite suite;
    sjk_suite_report report;
    std::string first_failure;
  };
  std::vector<Row> rows;
  for (sjk_suite s : suites) {
    sjk_suite_report report{};
    check(sjk_verify(s, args.trials, args.seed, &report));
    rows.push_back({s, report, report.failed ? sjk_last_error() : ""});
    if (report.failed) rep.exit_code = kExitVerification;
  }

  switch (common.fmt()) {
    case Format::Plain:
      for (const auto& r : rows) {
        rep.out << sjk_suite_name(r.suite) << ": passed " << r.report.passed << "/" << r.report.total << "\n";
        if (!r.first_failure.empty()) rep.out << "  first failure: " << r.first_failure << "\n";
      }
      break;
    case Format::Csv:
      rep.out << "suite,passed,failed,total\n";
      for (const auto& r : rows)
        rep.out << sjk_suite_name(r.suite) << "," << r.report.passed << "," << r.report.failed << ","
                << r.report.total << "\n";
      break;
    case Format::Json: {
      json j{{"command", "verify"}, {"trials", args.trials}, {"seed", args.seed}};
      json out_rows = json::array();
      for (const auto& r : rows) {
        json row{{"suite", sjk_suite_name(r.suite)},
                 {"passed", r.report.passed},
                 {"failed", r.report.failed},
                 {"total", r.report.total}};
        if (!r.first_failure.empty()) row["first_failure"] = r.first_failure;
        out_rows.push_back(std::move(row));
      }
      j["suites"] = std::move(out_rows);
      j["ok"] = rep.exit_code == 0;
      rep.out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---- oracle -----------------------------------------------------------------

struct OracleArgs {
  std::uint64_t n = 0;
  std::string a, b;
  std::uint64_t k = 0;
  bool exact = false;
  bool mc = false;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
};

// An MC estimate further than this many standard errors from jk_sum counts as a mismatch.
constexpr double kMcTolerance = 3.0;

void run_oracle(const OracleArgs& args, const Common& common, Report& rep) {
  const Rational a = parse_rational(args.a, "--a");
  const Rational b = parse_rational(args.b, "--b");

  sjk_rational* raw = nullptr;
  check(sjk_jk(args.n, a.get(), b.get(), args.k, SJK_JK_SUM, &raw));
  const Rational reference(raw);

  std::string mode, value, std_error, samples, seed, match;
  double deviation = 0;
  if (args.mc) {
    sjk_mc_estimate est{};
    check(sjk_mc_oracle(args.n, a.get(), b.get(), args.k, args.samples, args.seed, common.threads, &est));
    mode = "mc";
    value = real(est.mean);
    std_error = real(est.std_error);
    samples = std::to_string(est.samples);
    seed = std::to_string(est.seed);
    const double diff = est.mean - sjk_rational_to_double(reference.get());
    deviation = est.std_error > 0 ? diff / est.std_error : (diff == 0 ? 0.0 : 1e300);
    match = std::abs(deviation) <= kMcTolerance ? "ok" : "mismatch";
  } else {
    sjk_rational* v = nullptr;
    check(sjk_exact_oracle(args.n, a.get(), b.get(), args.k, &v));
    const Rational exact(v);
    mode = "exact";
    value = str(exact.get());
    match = sjk_rational_compare(exact.get(), reference.get()) == 0 ? "ok" : "mismatch";
  }
  if (match != "ok") rep.exit_code = kExitVerification;

  switch (common.fmt()) {
    case Format::Plain:
      rep.out << "N=" << args.n << " a=" << str(a.get()) << " b=" << str(b.get()) << " k=" << args.k << "\n";
      if (args.mc)
        rep.out << "oracle mc mean=" << value << " std_error=" << std_error << " samples=" << samples
                << " seed=" << seed << "\n";
      else
        rep.out << "oracle exact " << value << "\n";
      rep.out << "jk_sum " << str(reference.get());
      if (common.want_decimal()) rep.out << " " << decimal(reference.get(), common.digits);
      rep.out << "\n";
      if (args.mc) rep.out << "deviation " << real(deviation) << " std_error\n";
      rep.out << "match " << match << "\n";
      break;
    case Format::Csv:
      rep.out << "N,a,b,k,mode,value,std_error,samples,seed,jk_sum,match\n";
      rep.out << args.n << "," << str(a.get()) << "," << str(b.get()) << "," << args.k << "," << mode << ","
              << value << "," << std_error << "," << samples << "," << seed << "," << str(reference.get()) << ","
              << match << "\n";
      break;
    case Format::Json: {
      json j{{"command", "oracle"}, {"N", args.n},       {"a", str(a.get())},
             {"b", str(b.get())},   {"k", args.k},       {"mode", mode},
             {"value", value}};
      if (args.mc) {
        j["std_error"] = std_error;
        j["samples"] = args.samples;
        j["seed"] = args.seed;
        j["deviation"] = real(deviation);
      }
      j["jk_sum"] = str(reference.get());
      j["match"] = match;
      rep.out << j.dump(2) << "\n";
      break;
    }
  }
}

void emit_error(const Failure& f) {
  std::cerr << json{{"error", f.code}, {"exit", f.exit_code}, {"message", f.message}}.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation and cross-validation of the Selberg-type moment ratio J_k"};
  app.set_version_flag("--version", sjk_version());
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", common.output, "Write the report to this file instead of stdout");
  app.add_option("--digits", common.digits, "Also render values as decimals with this many digits")
      ->check(CLI::Range(0, 1000));

  JkArgs jk;
  auto* jk_cmd = app.add_subcommand("jk", "Compute J_k by the finite sum, the 4F3 form and the derivation");
  jk_cmd->add_option("--N", jk.n, "Number of variables")->required();
  jk_cmd->add_option("--a", jk.a, "Parameter a > 0 (p/q or decimal)")->required();
  jk_cmd->add_option("--b", jk.b, "Parameter b > 0 (p/q or decimal)")->required();
  jk_cmd->add_option("--k", jk.k, "Moment order")->required();
  jk_cmd->add_option("--method", jk.method)
      ->check(CLI::IsMember({"sum", "hyp", "derivation", "all"}))
      ->capture_default_str();

  LimitArgs limit;
  auto* limit_cmd = app.add_subcommand("limit", "Limit of J_k as N, a = a1 N, b = b1 N grow");
  limit_cmd->add_option("--a1", limit.a1, "Growth rate a1 >= 0")->required();
  limit_cmd->add_option("--b1", limit.b1, "Growth rate b1 >= 0")->required();
  limit_cmd->add_option("--k", limit.k, "Moment order >= 1")->required();
  limit_cmd->add_option("--method", limit.method)
      ->check(CLI::IsMember({"theorem", "corollary", "both"}))
      ->capture_default_str();

  ConvergeArgs conv;
  auto* conv_cmd = app.add_subcommand("converge", "Table of |J_k - limit| along a = a1 N, b = b1 N");
  conv_cmd->add_option("--a1", conv.a1)->required();
  conv_cmd->add_option("--b1", conv.b1)->required();
  conv_cmd->add_option("--k", conv.k)->required();
  conv_cmd->add_option("--schedule", conv.schedule, "Comma-separated N values")->required()->delimiter(',');

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized exact checks of the hypergeometric identities");
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"saalschutz", "contiguous", "chu", "t2106", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials)->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Validate J_k against its integral definition");
  oracle_cmd->add_option("--N", oracle.n)->required();
  oracle_cmd->add_option("--a", oracle.a)->required();
  oracle_cmd->add_option("--b", oracle.b)->required();
  oracle_cmd->add_option("--k", oracle.k)->required();
  auto* exact_flag = oracle_cmd->add_flag("--exact", oracle.exact, "Exact monomial expansion (N <= 5)");
  auto* mc_flag = oracle_cmd->add_flag("--mc", oracle.mc, "Monte Carlo estimate");
  exact_flag->excludes(mc_flag);
  oracle_cmd->add_option("--samples", oracle.samples)->capture_default_str();
  oracle_cmd->add_option("--seed", oracle.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error({kExitUsage, "Usage", e.what()});
    return kExitUsage;
  }

  if (const char* single = std::getenv("SELBERG_SINGLE_THREAD"); single && std::string(single) != "0")
    common.threads = 1;

  Report rep;
  try {
    if (*jk_cmd) run_jk(jk, common, rep);
    else if (*limit_cmd) run_limit(limit, common, rep);
    else if (*conv_cmd) run_converge(conv, common, rep);
    else if (*verify_cmd) run_verify(verify, common, rep);
    else if (*oracle_cmd) run_oracle(oracle, common, rep);
  } catch (const Failure& f) {
    emit_error(f);
    return f.exit_code;
  }

  if (common.output.empty()) {
    std::cout << rep.out.str();
  } else {
    std::ofstream file(common.output, std::ios::binary);
    file << rep.out.str();
    if (!file) {
      emit_error({kExitUsage, "Io", "cannot write " + common.output});
      return kExitUsage;
    }
  }
  if (rep.exit_code == kExitVerification)
    emit_error({kExitVerification, "VerificationFailed", "cross-check did not agree"});
  return rep.exit_code;
}
