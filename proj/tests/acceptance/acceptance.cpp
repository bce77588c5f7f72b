// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biharm/basis_kernel.hpp"
#include "biharm/cli.hpp"
#include "biharm/nitsche_bounds.hpp"
#include "biharm/radial_maps.hpp"
#include "biharm/verification.hpp"

using namespace biharm;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

const verification::VerificationReport& named(const std::vector<verification::VerificationReport>& reports,
                                              const std::string& name) {
  for (const auto& r : reports) {
    if (r.check_name == name) return r;
  }
  throw std::logic_error("missing report " + name);
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
  std::istringstream in(text);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = std::min(line.find(',', pos), line.size());
      double v = 0.0;
      std::from_chars(line.data() + pos, line.data() + comma, v);
      row.push_back(v);
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<double> kCardinalModuli{1.1, 1.25, 1.5, 2.0, 3.0, 5.0};

Outcome cardinal_suite() {
  const auto r = verification::check_cardinal_and_identity(kCardinalModuli, 1000);
  const auto& c = named(r, "cardinal-conditions");
  return {c.passed && c.worst_residual < 1e-9,
          fmt("16 conditions x %zu moduli, max error %.3e at t = %g", kCardinalModuli.size(), c.worst_residual,
              c.worst_location.t)};
}

Outcome identity_oracle() {
  const auto r = verification::check_cardinal_and_identity(kCardinalModuli, 1000);
  const auto& c = named(r, "identity-decomposition");
  return {c.passed && c.worst_residual < 1e-9,
          fmt("max |A + tB + U + V - r| = %.3e over %zu points", c.worst_residual, c.samples)};
}

Outcome sigma0_reproduction() {
  const double s2 = sigma0(Modulus(2.0));
  const double s3 = sigma0(Modulus(3.0));
  const auto lhopital = [](double t) {
    const BasisEval e = CardinalBasis(Modulus(t)).derivatives(t);
    return -e.d2A / e.d2B;
  };
  const double rel2 = std::abs(lhopital(2.0) / s2 - 1.0);
  const double rel3 = std::abs(lhopital(3.0) / s3 - 1.0);
  const bool ok = std::abs(s2 - 1.0077424) <= 1e-6 && std::abs(s3 - 1.042008) <= 1e-5 && rel2 < 1e-6 && rel3 < 1e-6;
  return {ok, fmt("sigma0(2) = %.9f, sigma0(3) = %.9f, -A''/B'' relative gaps %.1e, %.1e", s2, s3, rel2, rel3)};
}

Outcome ordering() {
  double worst_gap = INFINITY;
  double worst_t = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double t = 1.001 + 1.999 * i / 200.0;
    const double gap = nitsche_bound(t) - sigma0(Modulus(t));
    if (gap < worst_gap) {
      worst_gap = gap;
      worst_t = t;
    }
  }
  return {worst_gap > 0.0, fmt("min n(t) - sigma0(t) = %.3e at t = %.4f over 200 samples", worst_gap, worst_t)};
}

Outcome sandwich() {
  bool ok = true;
  std::string detail;
  for (double t : {1.1, 1.5, 2.0, 3.0}) {
    const SigmaEstimate est = certified_sigma(Modulus(t));
    const double s = est.minimax.sigma;
    const double s0 = sigma0(Modulus(t));
    const bool here = s > 1.0 && s < s0 && est.uncertainty < 1e-6;
    ok = ok && here;
    detail += fmt("t=%g: sigma=%.10f gap=%.1e; ", t, s, est.uncertainty);
  }
  return {ok, detail};
}

Outcome critical_certificate() {
  const CriticalMap m = critical_map(Modulus(2.0));
  const double d1 = eval_g_prime(m.coeffs, 1.0);
  const double dt = eval_g_prime(m.coeffs, 2.0);
  const MonotonicityReport rep = monotonicity_report(m.coeffs, 2.0);
  const double r_star = m.solution.r_star;
  const double at_star = eval_g_prime(m.coeffs, r_star);
  const bool interior = r_star > 1.0 && r_star < 2.0 && at_star >= -1e-8 && at_star <= 1e-6;
  const bool ok = d1 > 0.0 && dt > 0.0 && rep.min_gprime >= -1e-8 && rep.min_gprime <= 1e-6 && interior;
  return {ok, fmt("g0'(1) = %.3e (required > 0), g0'(2) = %.6e, min g0' = %.3e, g0'(r*) = %.3e at interior "
                  "r* = %.6f, x* = %.3e, y* = %.6e (status %s)",
                  d1, dt, rep.min_gprime, at_star, r_star, m.solution.x_star, m.solution.y_star,
                  std::string(to_string(m.solution.status)).c_str())};
}

Outcome lemma_suites() {
  std::vector<double> grid;
  for (int i = 0; i < 40; ++i) grid.push_back(1.1 + 3.9 * i / 39.0);
  bool ok = true;
  std::size_t points = 0;
  for (const auto& r : verification::check_kernel_inequalities(grid, 250)) {
    ok = ok && r.passed;
    points = std::min(points == 0 ? r.samples : points, r.samples);
  }
  ok = ok && points >= 10000;
  const auto tgrid = verification::default_t_grid();
  const auto mid = verification::check_phi_positive(tgrid);
  const auto rho = verification::check_rho_relations(tgrid);
  const bool mid_ok = named(mid, "ratio-at-midpoint").passed;
  const bool rho_ok = named(rho, "rho-identities").passed && named(rho, "rho-strict-relations").passed;
  return {ok && mid_ok && rho_ok,
          fmt("inequalities a-e at %zu points each: %s; ra(tau) > 1: %s; rho relations: %s", points,
              ok ? "ok" : "violated", mid_ok ? "ok" : "violated", rho_ok ? "ok" : "violated")};
}

Outcome limit_suite() {
  const auto r = verification::check_endpoint_limits({1.5, 2.0, 3.0});
  const auto& fin = named(r, "endpoint-limits-finite");
  const auto& div = named(r, "endpoint-limits-divergent");
  return {fin.passed && div.passed,
          fmt("max limit error %.3e (tol 1e-4); least divergent value at 1e-7 %.3e", fin.worst_residual,
              div.worst_residual)};
}

Outcome biharmonicity() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> c(-10.0, 10.0), rad(1.2, 4.8),
      ang(0.0, 2.0 * std::numbers::pi);
  double worst_residual = 0.0;
  double worst_laplacian = 0.0;
  for (int i = 0; i < 100; ++i) {
    const RadialCoefficients k{c(rng), c(rng), c(rng), c(rng), 0.0};
    worst_residual = std::max(worst_residual, biharmonic_residual(k, 32));
    const std::complex<double> z = std::polar(rad(rng), ang(rng));
    const LaplacianCoefficients lc = laplacian_coefficients(k);
    const std::complex<double> exact = lc.alpha * z + lc.beta / std::conj(z);
    worst_laplacian = std::max(worst_laplacian, std::abs(finite_difference_laplacian(k, z, 1e-3) - exact));
  }
  return {worst_residual < 1e-5 && worst_laplacian < 1e-5,
          fmt("max |bi-Laplacian| %.3e, max Laplacian identity error %.3e over 100 draws", worst_residual,
              worst_laplacian)};
}

Outcome errata_detection() {
  const auto res = verification::run_suite("audit", {1.5, 2.0, 3.0}, 1000);
  std::set<std::string> ids;
  for (const auto& e : res.errata) ids.insert(e.id);
  const bool expected = ids == std::set<std::string>{"printed-dU", "printed-dV", "printed-h0"};
  const auto& da = named(res.reports, "printed-dA");
  const auto& db = named(res.reports, "printed-dB");
  const auto h0 = verification::printed_h0_audit({2.0});
  const double factor = h0.worst_residual + 1.0;
  const bool ok = expected && res.passed && da.worst_residual < 1e-9 && db.worst_residual < 1e-9 &&
                  std::abs(factor - 2.33) < 0.01;
  return {ok, fmt("errata %zu (U', V', h0 expected), printed A' err %.1e, B' err %.1e, h0(2)/sigma0(2) = %.4f",
                  res.errata.size(), da.worst_residual, db.worst_residual, factor)};
}

Outcome figures() {
  using clock = std::chrono::steady_clock;
  std::ostringstream out1, out2, err;
  const auto t0 = clock::now();
  const int c1 = cli::run({"figure", "1", "--t", "1.5"}, out1, err);
  const double dt1 = std::chrono::duration<double>(clock::now() - t0).count();
  const auto t1 = clock::now();
  const int c2 = cli::run({"figure", "2"}, out2, err);
  const double dt2 = std::chrono::duration<double>(clock::now() - t1).count();
  if (c1 != 0 || c2 != 0) return {false, "figure command failed: " + err.str()};

  std::string h1, h2;
  const auto f1 = parse_csv(out1.str(), h1);
  bool ru_up = true, rv_down = true;
  double crossing = NAN;
  for (std::size_t i = 0; i + 1 < f1.size(); ++i) {
    ru_up = ru_up && f1[i + 1][1] > f1[i][1];
    rv_down = rv_down && f1[i + 1][2] < f1[i][2];
    const double a = f1[i][1] - f1[i][2], b = f1[i + 1][1] - f1[i + 1][2];
    if (a < 0.0 && b >= 0.0) crossing = f1[i][0] + (f1[i + 1][0] - f1[i][0]) * a / (a - b);
  }
  const bool cross_ok = std::abs(crossing - rho(1.5)) <= 1e-3 && std::abs(crossing - 1.250255) <= 1e-3;

  const auto f2 = parse_csv(out2.str(), h2);
  bool row2 = false, row3 = false, above = true;
  for (const auto& row : f2) {
    above = above && row[1] > row[2];
    if (row[0] == 2.0) row2 = std::abs(row[1] - 1.25) < 1e-9 && std::abs(row[2] - 1.0077424) <= 1e-6;
    if (row[0] == 3.0) row3 = std::abs(row[1] - 1.666667) < 1e-6 && std::abs(row[2] - 1.042008) <= 1e-5;
  }
  const bool ok = h1 == "r,minus_Uprime_over_Bprime,minus_Vprime_over_Bprime" && h2 == "t,nitsche_n,sigma0" &&
                  ru_up && rv_down && cross_ok && row2 && row3 && above && dt1 < 1.0 && dt2 < 1.0;
  return {ok, fmt("fig1: ru increasing %s, rv decreasing %s, crossing r = %.6f (rho = %.6f), %.3f s; "
                  "fig2: t=2 row %s, t=3 row %s, n > sigma0 %s, %.3f s",
                  ru_up ? "yes" : "no", rv_down ? "yes" : "no", crossing, rho(1.5), dt1, row2 ? "ok" : "bad",
                  row3 ? "ok" : "bad", above ? "yes" : "no", dt2)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cardinal conditions", cardinal_suite},
      {"identity decomposition", identity_oracle},
      {"sigma0 reproduction", sigma0_reproduction},
      {"sigma0 below n(t)", ordering},
      {"sigma sandwich and dual-solver agreement", sandwich},
      {"critical map certificate", critical_certificate},
      {"kernel inequality and critical radius suites", lemma_suites},
      {"endpoint limits", limit_suite},
      {"bi-harmonicity", biharmonicity},
      {"errata detection", errata_detection},
      {"figure reproduction", figures},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.passed && secs < 10.0;
    failures += ok ? 0 : 1;
    std::printf("%s %2zu %s: %s [%.2f s]\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
