#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fockq/errors.hpp"

using fockq::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("dim") {
  const Run a = run({"dim", "--n", "1", "--m", "1", "--p", "1"});
  CHECK(a.code == 0);
  CHECK(parsed(a)["dimension"] == 3);
  CHECK(parsed(a)["histogram"]["1"] == 2);
  CHECK(parsed(run({"dim", "--n", "3", "--m", "0", "--p", "0"}))["dimension"] == 1);
  CHECK(run({"dim", "--n", "0", "--m", "0", "--p", "1"}).code == 2);
  CHECK(run({"dim", "--n", "4", "--m", "0", "--p", "30", "--cap", "10"}).code == 2);
}

TEST_CASE("matrix") {
  const Run a = run({"matrix", "a-", "1", "--n", "1", "--m", "0", "--p", "1", "--mode", "numeric", "--q", "1"});
  REQUIRE(a.code == 0);
  const auto j = parsed(a);
  CHECK(j["dimension"] == 2);
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["value"][0] == 1.0);

  const auto h = parsed(run({"matrix", "H", "1", "--p", "0"}));
  CHECK(h["dimension"] == 1);
  CHECK(h["entries"].empty());

  CHECK(run({"matrix", "E", "0", "0", "--mode", "exact"}).code == 2);
  CHECK(run({"matrix", "E", "0", "0", "--mode", "classical"}).code == 0);
  CHECK(run({"matrix", "a+", "5", "--n", "1", "--m", "1"}).code == 2);
  CHECK(run({"matrix", "X", "1"}).code == 2);
  CHECK(run({"matrix", "a+", "1", "--mode", "exact", "--convention", "orthonormal"}).code == 2);
  CHECK(run({"matrix", "a+", "1", "--mode", "numeric"}).code == 2);
  CHECK(run({"matrix", "a+", "1", "--mode", "numeric", "--q", "0"}).code == 2);

  const Run csv = run({"matrix", "a-", "2", "--n", "1", "--m", "1", "--p", "2", "--format", "csv"});
  CHECK(csv.out == "row,col,value\n0,1,q + q^-1\n2,3,q\n");
  const Run coord = run({"matrix", "h^", "2", "--n", "1", "--m", "1", "--p", "1", "--mode", "classical", "--format", "coord"});
  CHECK(coord.code == 0);
  CHECK(coord.out.rfind("% h^ 2 dim 3", 0) == 0);
}

TEST_CASE("verify") {
  const Run all = run({"verify", "--all", "--n", "1", "--m", "1", "--p", "2", "--mode", "exact"});
  CHECK(all.code == 0);
  const auto j = parsed(all);
  CHECK(j["summary"]["failed"] == 0);
  for (const auto& r : j["reports"]) CHECK((r["status"] == "ExactZero" || r["status"] == "Skipped"));
  CHECK(all.err.find("failed=0") != std::string::npos);

  const auto serre = parsed(run({"verify", "--suite", "serre", "--n", "1", "--m", "1", "--p", "1"}));
  bool skipped_12e = false;
  for (const auto& r : serre["reports"]) skipped_12e |= r["relation"] == "R12e" && r["status"] == "Skipped";
  CHECK(skipped_12e);

  CHECK(run({"verify", "--suite", "deformed", "--mode", "numeric", "--q", "0.7", "--tol", "1e-9"}).code == 0);
  CHECK(run({"verify", "--suite", "deformed,cartan-weyl", "--mode", "numeric", "--q", "0.5+0.75i"}).code == 0);
  CHECK(run({"verify", "--suite", "deformed", "--mode", "numeric", "--q", "1"}).code == 2);
  CHECK(run({"verify", "--suite", "deformed", "--mode", "classical"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--suite", "ladder", "--n", "2", "--m", "1"}).code == 2);
  CHECK(run({"verify", "--all", "--mode", "classical", "--n", "2", "--m", "2", "--p", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "gl", "--tol", "0"}).code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args = {"verify", "--all", "--n", "2", "--m", "1", "--p", "2", "--mode", "numeric",
                                         "--q", "13/10", "--workers", "3"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sweep = {"stats", "sweep", "--n", "1", "--m", "1", "--p", "3", "--beta", "0:1:0.1"};
  CHECK(run(sweep).out == run(sweep).out);
}

TEST_CASE("stats config") {
  const auto sat = parsed(run({"stats", "config", "--p", "5", "•◦•|◦•||||"}));
  CHECK(sat["verdict"] == "Valid");
  CHECK(sat["saturated"] == true);
  const auto fermi = parsed(run({"stats", "config", "--p", "5", "•◦•|◦◦||||"}));
  CHECK(fermi["verdict"] == "Forbidden");
  CHECK(fermi["reason"] == "FermiExclusion");
  CHECK(fermi["orbital"] == 2);
  CHECK(run({"stats", "config", "--p", "5", "•x|"}).code == 2);
  CHECK(run({"stats", "config", "•|"}).code == 2);
}

TEST_CASE("stats sweep") {
  const Run r = run({"stats", "sweep", "--n", "1", "--m", "1", "--p", "1", "--eps", "1", "--beta", "0:2:0.5"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "beta,Z,mean_occ_1");
  int rows = 0;
  while (std::getline(lines, line)) {
    double beta = 0, z = 0;
    CHECK(std::sscanf(line.c_str(), "%lf,%lf", &beta, &z) == 2);
    CHECK(std::abs(z - (1.0 + 2.0 * std::exp(-beta))) < 1e-12);
    ++rows;
  }
  CHECK(rows == 5);
  CHECK(run({"stats", "sweep", "--n", "2", "--m", "1"}).code == 2);
  CHECK(run({"stats", "sweep", "--beta", "2:0:1"}).code == 2);
}

TEST_CASE("--out writes a file") {
  const std::string path = "fockq_cli_test_out.json";
  CHECK(run({"dim", "--n", "2", "--m", "0", "--p", "2", "--out", path}).code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["dimension"] == 6);
  std::remove(path.c_str());
}

TEST_CASE("numeric q parsing") {
  using fockq::cli::parse_numeric_q;
  CHECK(parse_numeric_q("7/10") == fockq::Complex(0.7, 0.0));
  CHECK(parse_numeric_q("0.5+0.75i") == fockq::Complex(0.5, 0.75));
  CHECK(parse_numeric_q("1/2-3/4i") == fockq::Complex(0.5, -0.75));
  CHECK(parse_numeric_q("i") == fockq::Complex(0.0, 1.0));
  CHECK(parse_numeric_q("-i") == fockq::Complex(0.0, -1.0));
  CHECK(parse_numeric_q("1e-1+2e+0i") == fockq::Complex(0.1, 2.0));
  CHECK_THROWS_AS(parse_numeric_q("x"), fockq::ArgumentError);
  CHECK(fockq::cli::parse_beta_range("0:2:0.5").size() == 5);
  CHECK(fockq::cli::parse_beta_range("1.5") == std::vector<double>{1.5});
}
