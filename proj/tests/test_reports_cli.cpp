#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "biharm/cli.hpp"
#include "biharm/reports.hpp"

using namespace biharm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

reports::Json json_of(const Run& r) { return reports::Json::parse(r.out); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("number formatting uses 9 significant digits and the C locale") {
  CHECK(reports::format_number(1.0077419643243) == "1.00774196");
  CHECK(reports::format_number(2.0) == "2");
  CHECK(reports::format_number(-1.5e-12) == "-1.5e-12");
  CHECK(reports::format_number(INFINITY) == "inf");
  CHECK(reports::format_number(-INFINITY) == "-inf");
  CHECK(reports::number(1.0077419643243).get<double>() == 1.00774196);
  CHECK(reports::number(NAN).get<std::string>() == "nan");
}

TEST_CASE("CSV has the exact header and LF endings") {
  const reports::Table t{{"a", "b"}, {{1.0, 0.5}, {2.25, -3.0}}};
  CHECK(reports::to_csv(t) == "a,b\n1,0.5\n2.25,-3\n");
  const reports::Table bad{{"a", "b"}, {{1.0}}};
  CHECK_THROWS((void)reports::to_csv(bad));
}

TEST_CASE("sigma0 command") {
  const Run r = run({"sigma0", "--t", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["version"].get<std::string>() == BIHARM_TEST_VERSION);
  CHECK(j["inputs"]["t"].get<double>() == 2.0);
  CHECK(j["t"].get<double>() == 2.0);
  CHECK(std::abs(j["sigma0"].get<double>() - 1.0077424) <= 1e-6);
  CHECK(j["sigma0"].get<double>() == 1.00774196);
  CHECK(j["nitsche"].get<double>() == 1.25);
  const Run text = run({"sigma0", "--t", "2"});
  CHECK(text.out.find("sigma0 = 1.00774196\n") != std::string::npos);
}

TEST_CASE("basis command at the inner circle") {
  const auto j = json_of(run({"basis", "--t", "2", "--r", "1", "--format", "json"}));
  CHECK(j["basis"]["A"].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(j["basis"]["B"].get<double>()) < 1e-9);
  CHECK(std::abs(j["basis"]["U"].get<double>()) < 1e-9);
  CHECK(std::abs(j["basis"]["V"].get<double>()) < 1e-9);
  CHECK(j["ratios"]["ru"].get<std::string>() == "-inf");
}

TEST_CASE("exit codes") {
  CHECK(run({"sigma0", "--t", "0.5"}).code == cli::kDomainError);
  CHECK(run({"sigma0", "--t", "1.0001"}).code == cli::kDomainError);
  CHECK(run({"map-solve", "--t", "2", "--s", "0.5"}).code == cli::kDomainError);
  CHECK(run({"map-eval", "--t", "2", "--s", "1.5", "--r", "3"}).code == cli::kDomainError);
  CHECK(run({"sigma", "--t", "2", "--tol", "1e-15"}).code == cli::kDomainError);
  CHECK(run({"sigma0"}).code == cli::kUsageError);
  CHECK(run({"sigma0", "--t", "abc"}).code == cli::kUsageError);
  CHECK(run({"sigma0", "--t", "2", "--bogus"}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"sigma0", "--t", "2", "--format", "svg"}).code == cli::kUsageError);
  CHECK(run({"verify", "--t-grid", "1.5,x"}).code == cli::kUsageError);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsageError);
  CHECK(run({"figure", "3"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("map commands") {
  const auto j = json_of(run({"map-solve", "--t", "2", "--s", "1.5", "--x", "0.1", "--y", "0.2", "--format", "json"}));
  CHECK(j["inputs"]["x"].get<double>() == 0.1);
  CHECK(j["monotonicity"]["is_diffeomorphism"].get<bool>());
  const auto e = json_of(run({"map-eval", "--t", "2", "--s", "1.5", "--x", "0.1", "--y", "0.2", "--r", "2",
                              "--format", "json"}));
  CHECK(e["g"].get<double>() == doctest::Approx(1.5));
  CHECK(e["g_prime"].get<double>() == doctest::Approx(0.2));
}

TEST_CASE("sigma, feasible and critical commands") {
  const Run s = run({"sigma", "--t", "2", "--format", "json"});
  CHECK(s.code == 0);
  const auto j = json_of(s);
  CHECK(j["sigma"].get<double>() == doctest::Approx(1.0032939265832).epsilon(1e-8));
  CHECK(j["minimax"]["status"].get<std::string>() == "degenerate");
  CHECK(j["uncertainty"].get<double>() < 1e-6);

  CHECK(json_of(run({"feasible", "--t", "2", "--s", "1.004", "--format", "json"}))["result"]["feasible"].get<bool>());
  CHECK_FALSE(
      json_of(run({"feasible", "--t", "2", "--s", "1.003", "--format", "json"}))["result"]["feasible"].get<bool>());

  const auto c = json_of(run({"critical", "--t", "2", "--format", "json"}));
  CHECK(c["g_prime_at_t"].get<double>() > 0.0);
  CHECK(c["monotonicity"]["min_gprime"].get<double>() > -1e-8);
}

TEST_CASE("verify command") {
  const Run r = run({"verify", "--suite", "all", "--t-grid", "1.1,1.5,2,3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["passed"].get<bool>());
  CHECK(j["errata"].size() == 5);
  CHECK(j["inputs"]["t_grid"].size() == 4);
  CHECK(j["inputs"]["samples"].get<int>() == 1000);
  CHECK(run({"verify", "--t-grid", "1.5,0.9"}).code == cli::kDomainError);
}

TEST_CASE("figure 1 CSV") {
  const Run r = run({"figure", "1", "--samples", "200"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 201);
  CHECK(ls[0] == "r,minus_Uprime_over_Bprime,minus_Vprime_over_Bprime");
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("figure 2 CSV and the sigma column") {
  const Run r = run({"figure", "2", "--samples", "4"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "t,nitsche_n,sigma0");
  CHECK(ls[2] == "2,1.25,1.00774196");
  CHECK(ls[4] == "3,1.66666667,1.04200853");
  const Run w = run({"figure", "2", "--samples", "2", "--with-sigma"});
  CHECK(lines(w.out)[0] == "t,nitsche_n,sigma0,sigma");
  CHECK(lines(w.out)[1].rfind("2,1.25,1.00774196,1.00329393", 0) == 0);
}

TEST_CASE("figure SVG is self-contained") {
  for (const char* which : {"1", "2"}) {
    const Run r = run({"figure", which, "--format", "svg", "--samples", "100"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(r.out.find("width=\"800\" height=\"600\"") != std::string::npos);
    CHECK(r.out.find("<polyline") != std::string::npos);
    CHECK(r.out.find("href") == std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
  }
}

TEST_CASE("repeated runs are bit-identical and --out writes the payload") {
  const std::vector<std::string> args{"figure", "2", "--samples", "50", "--format", "svg"};
  CHECK(run(args).out == run(args).out);
  const std::string path = "biharm_cli_out_test.csv";
  const Run r = run({"figure", "1", "--samples", "10", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"figure", "1", "--samples", "10"}).out);
  std::remove(path.c_str());
}

TEST_CASE("check-biharmonic command") {
  const Run r = run({"check-biharmonic", "--count", "20", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["passed"].get<bool>());
  CHECK(j["max_biharmonic_residual"].get<double>() < 1e-5);
}
