#pragma once

// Radial bi-harmonic maps f(r e^{i theta}) = g(r) e^{i(theta + phi)} with
// profile g(r) = d/r + a r + b r log r + c r^3.

#include <complex>
#include <cstddef>

namespace biharm {

struct RadialCoefficients {
  double d = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double phi = 0.0;  // rotation, radians
};

/// g(1) = 1, g(t) = s, g'(1) = x, g'(t) = y.
struct BoundarySpec {
  double t = 2.0;
  double s = 2.0;
  double x = 0.0;
  double y = 0.0;

  /// Throws DomainError unless t >= 1 + kModulusGuard, s > 1, x >= 0, y >= 0.
  void validate() const;
};

struct SolveDiagnostics {
  double condition = 0.0;  // 1-norm condition estimate of the 4x4 system
  bool ill_conditioned = false;  // condition > kIllConditioned
};

inline constexpr double kIllConditioned = 1e12;

/// Tolerance below which a negative g' still counts as monotone.
inline constexpr double kMonotonicityTol = 1e-10;

struct MonotonicityReport {
  double min_gprime = 0.0;
  double argmin_r = 0.0;
  bool is_diffeomorphism = false;
  std::size_t samples = 0;
};

/// Delta f = alpha z + beta / conj(z)
struct LaplacianCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
};

[[nodiscard]] RadialCoefficients solve_coefficients(const BoundarySpec& spec,
                                                    SolveDiagnostics* diagnostics = nullptr);

[[nodiscard]] double eval_g(const RadialCoefficients& k, double r);
[[nodiscard]] double eval_g_prime(const RadialCoefficients& k, double r);
[[nodiscard]] double eval_g_second(const RadialCoefficients& k, double r);

[[nodiscard]] std::complex<double> eval_map(const RadialCoefficients& k, std::complex<double> z);

[[nodiscard]] LaplacianCoefficients laplacian_coefficients(const RadialCoefficients& k) noexcept;

/// Five-point Laplacian of eval_map at z, Richardson-extrapolated from steps
/// h and h/2.
[[nodiscard]] std::complex<double> finite_difference_laplacian(const RadialCoefficients& k,
                                                               std::complex<double> z, double h);

/// max |L[L[g]]| over grid_n radii in [r_lo, r_hi], L[g] = g'' + g'/r - g/r^2,
/// both applications by central differences.
[[nodiscard]] double biharmonic_residual(const RadialCoefficients& k, std::size_t grid_n,
                                         double r_lo = 1.1, double r_hi = 5.0);

[[nodiscard]] MonotonicityReport monotonicity_report(const RadialCoefficients& k, double t);

/// Radial harmonic map of A(1, t) with outer image radius s (b = c = 0).
[[nodiscard]] RadialCoefficients harmonic_nitsche_map(double t, double s);

}  // namespace biharm
