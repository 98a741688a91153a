// Runs the installed command-line tool and checks output and exit codes.
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + std::string(SELBERG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string run_stderr(const std::string& args) {
  const std::string cmd = std::string(SELBERG_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("jk defaults to all three methods") {
  const Run r = run("jk --N 2 --a 1 --b 1 --k 2");
  CHECK(r.status == 0);
  CHECK(r.out == "N=2 a=1 b=1 k=2\nsum 11/30\nhyp 11/30\nderivation 11/30\nagreement ok\n");
}

TEST_CASE("decimal inputs are exact") {
  const Run r = run("jk --N 1 --a 0.5 --b 1.5 --k 1 --method sum --digits 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("sum 1/4 0.250") != std::string::npos);
}

TEST_CASE("limit both") {
  const Run r = run("limit --a1 1 --b1 1 --k 2");
  CHECK(r.status == 0);
  CHECK(r.out == "a1=1 b1=1 k=2\ntheorem 5/16\ncorollary 5/16\nagreement ok\n");
}

TEST_CASE("fixed CSV headers") {
  CHECK(first_line(run("--format csv jk --N 2 --a 1 --b 1 --k 2").out) == "N,a,b,k,method,value,decimal,agreement");
  CHECK(first_line(run("--format csv limit --a1 1 --b1 1 --k 2").out) == "a1,b1,k,method,value,decimal,agreement");
  CHECK(first_line(run("--format csv converge --a1 1 --b1 1 --k 2 --schedule 4,8").out) ==
        "N,a,b,jk,limit,abs_error");
  CHECK(first_line(run("--format csv verify --trials 5").out) == "suite,passed,failed,total");
  CHECK(first_line(run("--format csv oracle --N 2 --a 1 --b 1 --k 2").out) ==
        "N,a,b,k,mode,value,std_error,samples,seed,jk_sum,match");
}

TEST_CASE("converge CSV rows") {
  const Run r = run("--format csv converge --a1 1 --b1 1 --k 2 --schedule 2");
  CHECK(r.out == "N,a,b,jk,limit,abs_error\n2,2,2,23/70,5/16,9/560\n");
}

TEST_CASE("JSON output parses and mirrors the fields") {
  using nlohmann::json;
  const json jk = json::parse(run("--format json jk --N 2 --a 1 --b 1 --k 2").out);
  CHECK(jk["command"] == "jk");
  CHECK(jk["results"].size() == 3);
  CHECK(jk["results"][2]["value"] == "11/30");
  CHECK(jk["agreement"] == "ok");

  const json conv = json::parse(run("--format json converge --a1 1 --b1 1 --k 2 --schedule 2,4").out);
  CHECK(conv["rows"][0]["abs_error"] == "9/560");
  for (const char* field : {"N", "a", "b", "jk", "limit", "abs_error"}) CHECK(conv["rows"][1].contains(field));

  const json ver = json::parse(run("--format json verify --suite chu --trials 20 --seed 3").out);
  CHECK(ver["ok"] == true);
  CHECK(ver["suites"][0]["passed"] == 20);

  const json orc = json::parse(run("--format json oracle --N 2 --a 1 --b 1 --k 2 --mc --samples 5000 --seed 2").out);
  CHECK(orc["mode"] == "mc");
  CHECK(orc["jk_sum"] == "11/30");
}

TEST_CASE("verify reports per suite") {
  const Run r = run("verify --suite all --trials 200 --seed 42");
  CHECK(r.status == 0);
  for (const char* suite : {"saalschutz", "contiguous", "chu", "t2106"})
    CHECK(r.out.find(std::string(suite) + ": passed 200/200") != std::string::npos);
}

TEST_CASE("oracle modes") {
  const Run exact = run("oracle --N 2 --a 1 --b 1 --k 2 --exact");
  CHECK(exact.status == 0);
  CHECK(exact.out.find("oracle exact 11/30") != std::string::npos);
  CHECK(exact.out.find("match ok") != std::string::npos);
  CHECK(run("oracle --N 2 --a 1 --b 1 --k 2 --exact --mc").status == 1);
}

TEST_CASE("exit codes under fault injection") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("jk --N 2 --a 1 --b 1").status == 1);
  CHECK(run("jk --N 2 --a x --b 1 --k 1").status == 1);
  CHECK(run("jk --N 2 --a=-1 --b 1 --k 1").status == 1);
  CHECK(run("jk --N 2 --a 1 --b 1 --k 1 --method nope").status == 1);
  CHECK(run("--format xml jk --N 2 --a 1 --b 1 --k 1").status == 1);
  CHECK(run("converge --a1 1 --b1 1 --k 2 --schedule 4,0").status == 1);
  CHECK(run("oracle --N 7 --a 1 --b 1 --k 1 --exact").status == 1);
  CHECK(run("oracle --N 2 --a 1 --b 1 --k 1 --mc --samples 10").status == 1);
}

TEST_CASE("errors are one machine-parsable line") {
  const std::string err = run_stderr("jk --N 2 --a 1/0 --b 1 --k 1");
  REQUIRE(!err.empty());
  CHECK(err.find('\n') == err.size() - 1);
  const auto j = nlohmann::json::parse(err);
  CHECK(j["error"] == "Parse");
  CHECK(j["exit"] == 1);
}

TEST_CASE("--output writes the report to a file") {
  const std::string path = "cli_output_test.csv";
  std::remove(path.c_str());
  const Run r = run("--format csv --output " + path + " limit --a1 1 --b1 1 --k 1");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "a1,b1,k,method,value,decimal,agreement\n1,1,1,theorem,1/2,,ok\n1,1,1,corollary,1/2,,ok\n");
  std::remove(path.c_str());
}

TEST_CASE("output does not depend on the thread count") {
  const std::string args = "--format csv oracle --N 3 --a 2 --b 2 --k 2 --mc --samples 50000 --seed 9";
  CHECK(run(args, "SELBERG_SINGLE_THREAD=1 ").out == run(args).out);
  const std::string conv = "converge --a1 1/2 --b1 1/2 --k 2 --schedule 32,64,128,256";
  CHECK(run(conv, "SELBERG_SINGLE_THREAD=1 ").out == run(conv).out);
}
