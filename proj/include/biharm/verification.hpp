#pragma once

// Numerical certification of the sign conditions and closed forms that the
// cardinal basis and the critical moduli rest on, plus an audit of published
// closed forms against the analytically derived ones.
//
// Every check is deterministic for a given grid and returns one report per
// claim. Checks flagged with an erratum id audit a display that is known to be
// misprinted: such a check passes when the discrepancy is reproduced, so a
// misprint confirmation is never confused with an implementation failure.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace biharm::verification {

struct SamplePoint {
  double r = 0.0;
  double t = 0.0;
};

struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double worst_residual = 0.0;
  SamplePoint worst_location;
  std::size_t samples = 0;
  std::string erratum;  // registry id when this check audits a misprint
  std::string detail;
};

struct Erratum {
  std::string id;
  std::string display;
  std::string finding;
};

/// Known misprints and the check that confirms each.
[[nodiscard]] const std::vector<Erratum>& errata_registry();

[[nodiscard]] std::vector<double> default_t_grid();
[[nodiscard]] std::vector<double> default_kappa_grid();

/// Strict sign of the five polynomial-log expressions (items a..e).
[[nodiscard]] std::vector<VerificationReport> check_kernel_inequalities(const std::vector<double>& t_grid,
                                                                        std::size_t r_samples);

/// B' > 0, A' < 0, A'(t) = B'(t) = 0, ra and ru increasing, rv decreasing.
[[nodiscard]] std::vector<VerificationReport> check_signs_monotonicity(const std::vector<double>& t_grid,
                                                                       std::size_t r_samples);

/// Finite endpoint limits against Richardson extrapolation of the interior
/// quotients; divergence of ru at 1+ and rv at t-.
[[nodiscard]] std::vector<VerificationReport> check_endpoint_limits(const std::vector<double>& t_grid);

/// The 16 cardinal conditions and A + tB + U + V = r.
[[nodiscard]] std::vector<VerificationReport> check_cardinal_and_identity(const std::vector<double>& t_grid,
                                                                          std::size_t r_samples);

/// U' - V' against its rational closed form.
[[nodiscard]] VerificationReport check_uv_difference(const std::vector<double>& t_grid, std::size_t r_samples);

/// rho: U'(rho) = V'(rho) together with its inverse relation, then the strict
/// relations -U'(rho) > 0, ra(rho) > 1, rho > tau.
[[nodiscard]] std::vector<VerificationReport> check_rho_relations(const std::vector<double>& t_grid);

/// ra(tau) > 1 and the printed certificate phi(t) > 0 (misprinted).
[[nodiscard]] std::vector<VerificationReport> check_phi_positive(const std::vector<double>& t_grid);

/// K(kappa) > 0 and the printed factorisation of L through K (misprinted).
[[nodiscard]] std::vector<VerificationReport> check_K_positive(const std::vector<double>& kappa_grid);

/// Printed A', B', U', V' against the analytic derivatives.
[[nodiscard]] std::vector<VerificationReport> printed_derivative_audit(const std::vector<double>& t_grid,
                                                                       std::size_t r_samples);

/// Printed h0 against A + sigma0 B.
[[nodiscard]] VerificationReport printed_h0_audit(const std::vector<double>& t_grid);

/// Analytic first and second derivatives against Richardson-extrapolated
/// finite differences.
[[nodiscard]] std::vector<VerificationReport> finite_difference_audit(const std::vector<double>& t_grid);

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::vector<Erratum> errata;  // misprints confirmed by this run
  bool passed = false;
};

/// Suites: all, cardinal, inequalities, signs, limits, identities, audit, fd.
[[nodiscard]] std::vector<std::string_view> suite_names();

/// Runs the named suite with the checks evaluated in parallel. Report order is
/// fixed by the suite definition. Throws std::invalid_argument for an unknown
/// suite name.
[[nodiscard]] SuiteResult run_suite(std::string_view suite, const std::vector<double>& t_grid,
                                    std::size_t r_samples);

}  // namespace biharm::verification
