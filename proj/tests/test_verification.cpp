#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "biharm/reference_formulas.hpp"
#include "biharm/verification.hpp"

using namespace biharm;
using namespace biharm::verification;

namespace {

const VerificationReport& find(const SuiteResult& s, const std::string& name) {
  const auto it = std::find_if(s.reports.begin(), s.reports.end(),
                               [&](const VerificationReport& r) { return r.check_name == name; });
  REQUIRE(it != s.reports.end());
  return *it;
}

}  // namespace

TEST_CASE("full suite passes on the default grid and confirms every registered misprint") {
  const SuiteResult res = run_suite("all", default_t_grid(), 1000);
  for (const auto& r : res.reports) {
    CAPTURE(r.check_name);
    CAPTURE(r.worst_residual);
    CHECK(r.passed);
    CHECK(r.samples > 0);
  }
  CHECK(res.passed);
  std::set<std::string> ids;
  for (const auto& e : res.errata) ids.insert(e.id);
  CHECK(ids == std::set<std::string>{"printed-dU", "printed-dV", "printed-h0", "printed-phi",
                                     "printed-L-factorisation"});
  CHECK(res.errata.size() == errata_registry().size());
}

TEST_CASE("suite output is deterministic") {
  const SuiteResult a = run_suite("all", {1.25, 2.0}, 300);
  const SuiteResult b = run_suite("all", {1.25, 2.0}, 300);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].check_name == b.reports[i].check_name);
    CHECK(a.reports[i].worst_residual == b.reports[i].worst_residual);
    CHECK(a.reports[i].worst_location.r == b.reports[i].worst_location.r);
  }
}

TEST_CASE("sub-suites and argument validation") {
  for (std::string_view name : suite_names()) {
    CAPTURE(name);
    const SuiteResult res = run_suite(name, {1.5, 3.0}, 100);
    CHECK_FALSE(res.reports.empty());
    CHECK(res.passed);
  }
  CHECK_THROWS_AS((void)run_suite("nope", {2.0}, 100), std::invalid_argument);
  CHECK_THROWS_AS((void)run_suite("all", {}, 100), std::invalid_argument);
  CHECK_THROWS_AS((void)run_suite("all", {2.0}, 1), std::invalid_argument);
}

TEST_CASE("kernel inequalities hold at more than 10^4 points") {
  std::vector<double> grid;
  for (int i = 0; i < 40; ++i) grid.push_back(1.1 + 3.9 * i / 39.0);
  std::size_t samples = 0;
  for (const auto& r : check_kernel_inequalities(grid, 250)) {
    CAPTURE(r.check_name);
    CHECK(r.passed);
    samples = r.samples;
  }
  CHECK(samples >= 10000);
}

TEST_CASE("A' < 0 is lost near r = 1 once A''(1) changes sign") {
  // A''(1) vanishes near t = 7.0838; beyond it A' is positive just inside r = 1.
  const auto reports = check_signs_monotonicity({10.0}, 1000);
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [](const auto& r) { return r.check_name == "sign-dA-negative"; });
  REQUIRE(it != reports.end());
  CHECK_FALSE(it->passed);
  CHECK(it->worst_location.r < 1.5);
  CHECK(check_signs_monotonicity({7.0}, 1000)[1].passed);
}

TEST_CASE("printed derivative displays") {
  const SuiteResult res = run_suite("audit", {1.5, 2.0, 3.0}, 500);
  CHECK(find(res, "printed-dA").worst_residual < 1e-9);
  CHECK(find(res, "printed-dB").worst_residual < 1e-9);
  CHECK(find(res, "printed-dU").worst_residual > 1.0);
  CHECK(find(res, "printed-dV").worst_residual > 1.0);
  CHECK(reference::printed_dU(2.0, 2.0) == doctest::Approx(4.46485).epsilon(1e-5));
  CHECK(reference::printed_dV(2.0, 2.0) == doctest::Approx(-13.8828).epsilon(1e-5));
  CHECK(reference::printed_h0(1.0, 2.0) == doctest::Approx(1.0));
  CHECK(reference::printed_h0(2.0, 2.0) == doctest::Approx(2.346237).epsilon(1e-6));
}

TEST_CASE("printed phi and L factorisation") {
  CHECK(reference::phi(2.0) == doctest::Approx(-804.6).epsilon(1e-4));
  for (double k : {1.5, 2.0, 4.0}) {
    CHECK(reference::K(k) > 0.0);
    CHECK(reference::L(k) == doctest::Approx(-reference::L_factored(k)).epsilon(1e-9));
  }
}

TEST_CASE("kernel inequality signs") {
  CHECK(reference::kernel_inequality_sign('b') == -1);
  for (char c : {'a', 'c', 'd', 'e'}) CHECK(reference::kernel_inequality_sign(c) == 1);
  CHECK_THROWS((void)reference::kernel_inequality('z', 1.5, 2.0));
}

TEST_CASE("U' - V' closed form") {
  CHECK(reference::uv_difference(1.5, 2.0) == doctest::Approx(0.00462963).epsilon(1e-6));
  CHECK(reference::rho_inverse(1.250255) == doctest::Approx(1.5).epsilon(1e-5));
}
