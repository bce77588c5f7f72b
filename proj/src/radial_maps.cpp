#include "biharm/radial_maps.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "biharm/basis_kernel.hpp"
#include "biharm/errors.hpp"
#include "biharm/kernels.hpp"
#include "golden_section.hpp"

namespace biharm {

namespace {

constexpr std::size_t kMonotonicityGrid = 512;

// Relative step for the nested radial operator. Four nested differences
// divide rounding noise by h^4, so the step is large and the truncation error
// is removed by two Richardson levels instead.
constexpr long double kResidualStep = 0.02L;

void require_positive_radius(double r) {
  if (!(r > 0.0)) {
    std::ostringstream msg;
    msg << "profile evaluated at r = " << r << " <= 0";
    throw DomainError(msg.str());
  }
}

long double profile_ld(const RadialCoefficients& k, long double r) {
  return static_cast<long double>(k.d) / r + static_cast<long double>(k.a) * r +
         static_cast<long double>(k.b) * r * std::log(r) + static_cast<long double>(k.c) * r * r * r;
}

template <class F>
long double radial_operator(F&& f, long double r, long double h) {
  const long double fp = f(r + h);
  const long double f0 = f(r);
  const long double fm = f(r - h);
  return (fp - 2.0L * f0 + fm) / (h * h) + (fp - fm) / (2.0L * h * r) - f0 / (r * r);
}

long double nested_operator(const RadialCoefficients& k, long double r, long double h) {
  const auto g = [&](long double x) { return profile_ld(k, x); };
  const auto lg = [&](long double x) { return radial_operator(g, x, h); };
  return radial_operator(lg, r, h);
}

}  // namespace

void BoundarySpec::validate() const {
  if (!(t >= 1.0 + kModulusGuard) || !std::isfinite(t)) throw DomainError("boundary spec: t below 1 + guard");
  if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("boundary spec: s must exceed 1");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("boundary spec: x must be >= 0");
  if (!(y >= 0.0) || !std::isfinite(y)) throw DomainError("boundary spec: y must be >= 0");
}

RadialCoefficients solve_coefficients(const BoundarySpec& spec, SolveDiagnostics* diagnostics) {
  spec.validate();
  const double t = spec.t;
  const double lt = std::log(t);
  Eigen::Matrix4d m;
  // columns: d, a, b, c
  m << 1.0, 1.0, 0.0, 1.0,                              // g(1)
      1.0 / t, t, t * lt, t * t * t,                    // g(t)
      -1.0, 1.0, 1.0, 3.0,                              // g'(1)
      -1.0 / (t * t), 1.0, 1.0 + lt, 3.0 * t * t;       // g'(t)
  const Eigen::Vector4d rhs(1.0, spec.s, spec.x, spec.y);

  const Eigen::PartialPivLU<Eigen::Matrix4d> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > 0.0)) throw SingularSystemError("boundary system is singular");
  if (diagnostics != nullptr) {
    diagnostics->condition = 1.0 / rcond;
    diagnostics->ill_conditioned = diagnostics->condition > kIllConditioned;
  }
  const Eigen::Vector4d sol = lu.solve(rhs);
  if (!sol.allFinite()) throw SingularSystemError("boundary system produced non-finite coefficients");
  return {sol[0], sol[1], sol[2], sol[3], 0.0};
}

double eval_g(const RadialCoefficients& k, double r) {
  require_positive_radius(r);
  return k.d / r + k.a * r + k.b * r * std::log(r) + k.c * r * r * r;
}

double eval_g_prime(const RadialCoefficients& k, double r) {
  require_positive_radius(r);
  return -k.d / (r * r) + k.a + k.b * (1.0 + std::log(r)) + 3.0 * k.c * r * r;
}

double eval_g_second(const RadialCoefficients& k, double r) {
  require_positive_radius(r);
  return 2.0 * k.d / (r * r * r) + k.b / r + 6.0 * k.c * r;
}

std::complex<double> eval_map(const RadialCoefficients& k, std::complex<double> z) {
  const double r = std::abs(z);
  if (!(r > 0.0)) throw DomainError("radial map is undefined at z = 0");
  const std::complex<double> base = z * (eval_g(k, r) / r);
  return base * std::polar(1.0, k.phi);
}

LaplacianCoefficients laplacian_coefficients(const RadialCoefficients& k) noexcept {
  return {8.0 * k.c, 2.0 * k.b};
}

std::complex<double> finite_difference_laplacian(const RadialCoefficients& k, std::complex<double> z,
                                                 double h) {
  if (!(h > 0.0) || !(std::abs(z) > 2.0 * h)) throw DomainError("laplacian stencil reaches z = 0");
  const auto five_point = [&](double step) {
    const std::complex<double> i(0.0, step);
    return (eval_map(k, z + step) + eval_map(k, z - step) + eval_map(k, z + i) + eval_map(k, z - i) -
            4.0 * eval_map(k, z)) /
           (step * step);
  };
  return (4.0 * five_point(0.5 * h) - five_point(h)) / 3.0;
}

double biharmonic_residual(const RadialCoefficients& k, std::size_t grid_n, double r_lo, double r_hi) {
  if (grid_n < 16) throw DomainError("biharmonic_residual needs grid_n >= 16");
  if (!(r_lo > 0.0) || !(r_hi > r_lo)) throw DomainError("biharmonic_residual needs 0 < r_lo < r_hi");
  if (r_lo * (1.0L - 2.0L * kResidualStep) <= 0.0L) throw DomainError("stencil reaches r <= 0");

  const auto values = kernels::tabulate(grid_n, [&](std::size_t i) {
    const long double r = static_cast<long double>(r_lo) +
                          (static_cast<long double>(r_hi) - r_lo) * static_cast<long double>(i) /
                              static_cast<long double>(grid_n - 1);
    const long double h = kResidualStep * r;
    const long double l1 = nested_operator(k, r, h);
    const long double l2 = nested_operator(k, r, h / 2.0L);
    const long double l4 = nested_operator(k, r, h / 4.0L);
    const long double first_a = (4.0L * l2 - l1) / 3.0L;
    const long double first_b = (4.0L * l4 - l2) / 3.0L;
    return static_cast<double>(std::abs((16.0L * first_b - first_a) / 15.0L));
  });
  return kernels::omp::argmax(values).value;
}

MonotonicityReport monotonicity_report(const RadialCoefficients& k, double t) {
  if (!(t > 1.0) || !std::isfinite(t)) throw DomainError("monotonicity_report needs t > 1");
  const std::size_t n = kMonotonicityGrid;
  std::vector<double> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    radii[i] = 1.0 + (t - 1.0) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  radii.back() = t;
  const auto gp = kernels::serial::tabulate(n, [&](std::size_t i) { return eval_g_prime(k, radii[i]); });
  const kernels::Extremum coarse = kernels::serial::argmin(gp);

  MonotonicityReport report;
  report.min_gprime = coarse.value;
  report.argmin_r = radii[coarse.index];
  report.samples = n;

  const double lo = radii[coarse.index == 0 ? 0 : coarse.index - 1];
  const double hi = radii[std::min(n - 1, coarse.index + 1)];
  const auto refined = detail::golden_section_min([&](double r) { return eval_g_prime(k, r); }, lo, hi,
                                                  1e-13 * t, 200);
  report.samples += refined.evaluations;
  if (refined.value < report.min_gprime) {
    report.min_gprime = refined.value;
    report.argmin_r = refined.x;
  }
  report.is_diffeomorphism = report.min_gprime >= -kMonotonicityTol;
  return report;
}

RadialCoefficients harmonic_nitsche_map(double t, double s) {
  if (!(t > 1.0) || !(s > 1.0)) throw DomainError("harmonic_nitsche_map needs t > 1 and s > 1");
  const double den = 1.0 - t * t;
  return {(t * s - t * t) / den, (1.0 - t * s) / den, 0.0, 0.0, 0.0};
}

}  // namespace biharm
