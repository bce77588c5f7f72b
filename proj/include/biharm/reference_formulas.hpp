#pragma once

// Closed forms as originally published, transcribed verbatim, misprints
// included. Only the audit in verification.hpp reads these; every production
// path derives its values from the cardinal basis instead.

namespace biharm::reference {

/// Printed first derivatives of the cardinal functions.
[[nodiscard]] double printed_dA(double r, double t);
[[nodiscard]] double printed_dB(double r, double t);
[[nodiscard]] double printed_dU(double r, double t);
[[nodiscard]] double printed_dV(double r, double t);

/// Printed critical homogeneous profile h0(r).
[[nodiscard]] double printed_h0(double r, double t);

/// U'(r) - V'(r) = (-3r^4 + t^2 + r^2(1 + t^2)) / (2 r^2 (t^2 - 1)).
[[nodiscard]] double uv_difference(double r, double t);

/// Inverse of rho: t = rho sqrt(3 rho^2 - 1) / sqrt(1 + rho^2).
[[nodiscard]] double rho_inverse(double rho);

/// The five polynomial-log expressions whose signs drive the monotonicity of
/// the cardinal basis, items 'a'..'e'. Expected signs: a > 0, b < 0, c > 0,
/// d > 0, e > 0 for 1 < r < t.
[[nodiscard]] double kernel_inequality(char item, double r, double t);
[[nodiscard]] int kernel_inequality_sign(char item);

/// phi(t), claimed positive for t > 1 as the certificate of ra((1+t)/2) > 1.
[[nodiscard]] double phi(double t);

/// K(kappa), claimed positive for kappa > 1.
[[nodiscard]] double K(double kappa);

/// L(kappa) with eta = kappa(3 kappa - 1)/(1 + kappa) in place of the stray s.
[[nodiscard]] double L(double kappa);

/// Printed factorisation kappa(-1 - 2 kappa + 3 kappa^2)/(1 + kappa)^2 * K(kappa).
[[nodiscard]] double L_factored(double kappa);

}  // namespace biharm::reference
