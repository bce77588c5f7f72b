#pragma once

// Critical moduli for radial maps of A(1, t) onto A(1, s):
//   n(t)      harmonic maps,
//   sigma0(t) bi-harmonic maps with zero boundary speeds (closed form),
//   sigma(t)  bi-harmonic maps with free speeds x, y >= 0, defined by
//             sigma = inf_{x,y>=0} sup_{1<=r<=t} [ra(r) + x ru(r) + y rv(r)].
// sigma is computed twice: by direct convex minimisation of the inner sup and
// by bisection on the feasibility of a nondecreasing profile.

#include <cstddef>
#include <string_view>
#include <vector>

#include "biharm/basis_kernel.hpp"
#include "biharm/kernels.hpp"
#include "biharm/radial_maps.hpp"

namespace biharm {

inline constexpr std::size_t kSupGrid = 2048;
inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kMinSolverTol = 1e-10;

[[nodiscard]] double nitsche_bound(double t);
[[nodiscard]] double sigma0(Modulus t);
/// Root of U'(r) = V'(r) in (1, t).
[[nodiscard]] double rho(double t);
[[nodiscard]] double tau(double t);

struct SupResult {
  double value = 0.0;
  double r_star = 0.0;
};

/// Inner supremum of Phi(r) = ra + x ru + y rv over [1, t]. The ratio table is
/// built once per modulus, so repeated (x, y) queries are cheap. The maximum
/// is not assumed unimodal: every grid local maximum close to the best one is
/// refined by golden section.
class InnerSup {
 public:
  explicit InnerSup(Modulus t, std::size_t grid = kSupGrid,
                    kernels::Backend backend = kernels::Backend::openmp);

  [[nodiscard]] SupResult operator()(double x, double y) const;
  [[nodiscard]] const CardinalBasis& basis() const noexcept { return basis_; }

 private:
  CardinalBasis basis_;
  kernels::RatioTable table_;
  kernels::Backend backend_;
};

[[nodiscard]] SupResult sup_inner(Modulus t, double x, double y);

/// Any (x, y) >= 0 that makes s attainable satisfies x + y <= speed_bound(t, s).
/// Uses Phi(rho) = ra(rho) + (x + y) ru(rho) with ru(rho) = rv(rho) > 0.
[[nodiscard]] double speed_bound(Modulus t, double s);

enum class MinimaxStatus { converged, max_iter, degenerate };

[[nodiscard]] std::string_view to_string(MinimaxStatus status) noexcept;

struct MinimaxSolution {
  double t = 0.0;
  double sigma = 0.0;
  double x_star = 0.0;
  double y_star = 0.0;
  double r_star = 0.0;
  std::size_t iterations = 0;
  MinimaxStatus status = MinimaxStatus::converged;
  /// min over [1, t] of g0' for the map built from (sigma, x_star, y_star).
  double certificate = 0.0;
};

/// Minimises F(x, y) = sup_r Phi over the quadrant. F is convex, so
/// G(x) = min_y F(x, y) is convex too and both levels use golden section,
/// seeded from a coarse x grid evaluated in parallel. Status is degenerate
/// when the optimum sits on x = 0 or y = 0.
[[nodiscard]] MinimaxSolution sigma_minimax(Modulus t, double tol = 1e-8,
                                            kernels::Backend backend = kernels::Backend::openmp);

struct FeasibilityResult {
  bool feasible = false;
  double witness_x = 0.0;  // meaningful only when feasible
  double witness_y = 0.0;
  double max_violation = 0.0;  // max over r of -(A' + sB' + xU' + yV')
};

/// Existence of x, y >= 0 with A' + s B' + x U' + y V' >= -kFeasibilityTol on
/// [1, t]. Each sampled radius is a half-plane in (x, y); the quadrant is
/// clipped against them and candidate witnesses are checked on the continuum,
/// adding violated radii until the verdict settles.
[[nodiscard]] FeasibilityResult feasible(Modulus t, double s);

/// Bisection on s over (1, sigma0(t)] using feasible().
[[nodiscard]] double sigma_bisection(Modulus t, double tol = 1e-8);

/// Both solvers; uncertainty is their gap.
struct SigmaEstimate {
  MinimaxSolution minimax;
  double bisection = 0.0;
  double uncertainty = 0.0;
};

[[nodiscard]] SigmaEstimate certified_sigma(Modulus t, double tol = 1e-8);

/// h = A + sigma0 B: g(1) = 1, g(t) = sigma0, zero speeds at both ends.
[[nodiscard]] RadialCoefficients critical_homogeneous_map(Modulus t);

struct CriticalMap {
  RadialCoefficients coeffs;
  MinimaxSolution solution;
};

[[nodiscard]] CriticalMap critical_map(Modulus t, double tol = 1e-8);

}  // namespace biharm
