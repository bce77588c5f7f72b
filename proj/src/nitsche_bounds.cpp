#include "biharm/nitsche_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "biharm/errors.hpp"
#include "golden_section.hpp"

namespace biharm {

namespace {

constexpr std::size_t kMaxRefinedPeaks = 32;
constexpr std::size_t kSeedPoints = 9;
constexpr std::size_t kMaxGoldenSteps = 300;
constexpr std::size_t kMaxExchanges = 200;

void require_tolerance(double tol) {
  if (!(tol >= kMinSolverTol)) {
    std::ostringstream msg;
    msg << "solver tolerance " << tol << " below " << kMinSolverTol;
    throw DomainError(msg.str());
  }
}

struct Point {
  double x;
  double y;
};

using Polygon = std::vector<Point>;

// Keep the part of a convex polygon where a x + b y >= c.
Polygon clip(const Polygon& poly, double a, double b, double c) {
  Polygon out;
  const std::size_t n = poly.size();
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    const double fp = a * p.x + b * p.y - c;
    const double fq = a * q.x + b * q.y - c;
    if (fp >= 0.0) out.push_back(p);
    if ((fp >= 0.0) != (fq >= 0.0)) {
      const double w = fp / (fp - fq);
      out.push_back({p.x + w * (q.x - p.x), p.y + w * (q.y - p.y)});
    }
  }
  return out;
}

Point centroid(const Polygon& poly) {
  Point c{0.0, 0.0};
  for (const Point& p : poly) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x = std::max(0.0, c.x / static_cast<double>(poly.size()));
  c.y = std::max(0.0, c.y / static_cast<double>(poly.size()));
  return c;
}

// Worst g' over [1, t] for the profile with data (t, s, x, y), obtained via
// the 4x4 coefficient solve rather than the cardinal basis.
MonotonicityReport profile_check(double t, double s, Point w) {
  return monotonicity_report(solve_coefficients({t, s, w.x, w.y}), t);
}

FeasibilityResult verdict_on_grid(const CardinalBasis& basis, double s, std::size_t n) {
  const double t = basis.t();
  const double bound = 1.05 * speed_bound(Modulus(t), s) + 1e-12;
  Polygon poly{{0.0, 0.0}, {bound, 0.0}, {0.0, bound}};

  struct HalfPlane {
    double a, b, c;
  };
  const auto half_plane = [&](double r) {
    const BasisEval e = basis.derivatives(r);
    return HalfPlane{e.dU, e.dV, -(e.dA + s * e.dB) - kFeasibilityTol};
  };

  const auto infeasible_from = [&](const Polygon& last) {
    const MonotonicityReport rep = profile_check(t, s, centroid(last));
    return FeasibilityResult{false, 0.0, 0.0, std::max(kFeasibilityTol * 2.0, -rep.min_gprime)};
  };

  for (double r : kernels::open_linspace(1.0, t, n)) {
    const HalfPlane h = half_plane(r);
    Polygon next = clip(poly, h.a, h.b, h.c);
    if (next.empty()) return infeasible_from(poly);
    poly = std::move(next);
  }

  for (std::size_t k = 0; k < kMaxExchanges; ++k) {
    const Point w = centroid(poly);
    const MonotonicityReport rep = profile_check(t, s, w);
    const double violation = std::max(0.0, -rep.min_gprime);
    if (violation <= kFeasibilityTol) return {true, w.x, w.y, violation};
    const double r = std::clamp(rep.argmin_r, 1.0, t);
    const HalfPlane h = half_plane(r);
    Polygon next = clip(poly, h.a, h.b, h.c);
    if (next.empty()) return {false, 0.0, 0.0, violation};
    // A degenerate cut that leaves the polygon unchanged cannot make progress.
    if (next.size() == poly.size() &&
        std::equal(next.begin(), next.end(), poly.begin(),
                   [](const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; })) {
      return {false, 0.0, 0.0, violation};
    }
    poly = std::move(next);
  }
  const MonotonicityReport rep = profile_check(t, s, centroid(poly));
  return {false, 0.0, 0.0, std::max(kFeasibilityTol * 2.0, -rep.min_gprime)};
}

}  // namespace

double nitsche_bound(double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("nitsche_bound needs t >= 1");
  return (1.0 + t * t) / (2.0 * t);
}

double sigma0(Modulus modulus) {
  const double t = modulus.value();
  const double t2 = t * t;
  const double lt = std::log(t);
  return t * (3.0 - 4.0 * t2 + t2 * t2 + 4.0 * t2 * lt) / (2.0 - 2.0 * t2 + lt + 3.0 * t2 * t2 * lt);
}

double rho(double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("rho needs t >= 1");
  const double t2 = t * t;
  return std::sqrt((1.0 + t2 + std::sqrt(1.0 + 14.0 * t2 + t2 * t2)) / 6.0);
}

double tau(double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("tau needs t >= 1");
  return 0.5 * (1.0 + t);
}

InnerSup::InnerSup(Modulus t, std::size_t grid, kernels::Backend backend)
    : basis_(t), backend_(backend) {
  if (grid < 16) throw DomainError("inner sup grid needs at least 16 points");
  const auto radii = kernels::log_spaced(1.0, t.value(), grid);
  table_ = kernels::tabulate_ratios(basis_, radii, backend_);
}

SupResult InnerSup::operator()(double x, double y) const {
  if (!(x >= 0.0) || !(y >= 0.0)) throw DomainError("inner sup needs x, y >= 0");
  const std::size_t n = table_.size();
  const auto phi_at = [&](std::size_t i) { return affine_ratio(table_.ra[i], table_.ru[i], table_.rv[i], x, y); };
  const std::vector<double> values = kernels::tabulate(n, phi_at, backend_);
  const kernels::Extremum best =
      backend_ == kernels::Backend::serial ? kernels::serial::argmax(values) : kernels::omp::argmax(values);

  SupResult result{best.value, table_.r[best.index]};
  const double threshold = best.value - 1e-6 * (1.0 + std::abs(best.value));

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i + 1 == n || values[i] >= values[i + 1];
    if (left_ok && right_ok && values[i] >= threshold) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  if (peaks.size() > kMaxRefinedPeaks) peaks.resize(kMaxRefinedPeaks);

  const auto phi = [&](double r) {
    const RatioEval e = basis_.ratios(r);
    return affine_ratio(e.ra, e.ru, e.rv, x, y);
  };
  const double t = basis_.t();
  for (std::size_t i : peaks) {
    const double lo = table_.r[i == 0 ? 0 : i - 1];
    const double hi = table_.r[std::min(n - 1, i + 1)];
    const auto m = detail::golden_section_max(phi, lo, hi, 1e-12 * t, kMaxGoldenSteps);
    if (m.value > result.value) result = {m.value, m.x};
  }
  return result;
}

SupResult sup_inner(Modulus t, double x, double y) { return InnerSup(t)(x, y); }

double speed_bound(Modulus t, double s) {
  const CardinalBasis basis(t);
  const RatioEval at_rho = basis.ratios(rho(t.value()));
  const double q = std::min(at_rho.ru, at_rho.rv);
  if (!(q > 0.0)) throw std::runtime_error("speed bound needs -U'(rho)/B'(rho) > 0");
  return std::max(s - at_rho.ra, 0.0) / q;
}

std::string_view to_string(MinimaxStatus status) noexcept {
  switch (status) {
    case MinimaxStatus::converged:
      return "converged";
    case MinimaxStatus::max_iter:
      return "max_iter";
    case MinimaxStatus::degenerate:
      return "degenerate";
  }
  return "unknown";
}

MinimaxSolution sigma_minimax(Modulus t, double tol, kernels::Backend backend) {
  require_tolerance(tol);
  const InnerSup sup(t, kSupGrid, backend);
  const double s0 = sigma0(t);
  const double bound = 1.05 * speed_bound(t, s0) + 1e-12;
  const double width = 1e-3 * tol * std::max(1.0, bound);

  MinimaxSolution sol;
  sol.t = t.value();
  const auto inner = [&](double x) {
    const auto m = detail::golden_section_min([&](double y) { return sup(x, y).value; }, 0.0,
                                              std::max(bound - x, width), width, kMaxGoldenSteps, true);
    return m;
  };
  const auto outer_value = [&](double x) { return inner(x).value; };

  // Seed: G on a coarse x grid; the convex minimiser lies between the
  // neighbours of the best seed.
  std::vector<double> seeds(kSeedPoints);
  for (std::size_t i = 0; i < kSeedPoints; ++i) {
    seeds[i] = bound * static_cast<double>(i) / static_cast<double>(kSeedPoints - 1);
  }
  const std::vector<double> seed_values =
      kernels::tabulate(kSeedPoints, [&](std::size_t i) { return outer_value(seeds[i]); }, backend);
  const std::size_t best_seed = kernels::serial::argmin(seed_values).index;
  const double lo = seeds[best_seed == 0 ? 0 : best_seed - 1];
  const double hi = seeds[std::min(kSeedPoints - 1, best_seed + 1)];

  const auto outer = detail::golden_section_min(outer_value, lo, hi, width, kMaxGoldenSteps, true);

  sol.x_star = outer.x;
  const auto y_opt = inner(sol.x_star);
  const bool exhausted = !outer.converged || !y_opt.converged;
  sol.y_star = y_opt.x;
  const SupResult at_opt = sup(sol.x_star, sol.y_star);
  sol.sigma = at_opt.value;
  sol.r_star = at_opt.r_star;
  sol.iterations = kSeedPoints + outer.evaluations;

  if (exhausted) {
    sol.status = MinimaxStatus::max_iter;
  } else if (sol.x_star == 0.0 || sol.y_star == 0.0) {
    sol.status = MinimaxStatus::degenerate;
  } else {
    sol.status = MinimaxStatus::converged;
  }

  if (sol.sigma > 1.0) {
    sol.certificate =
        monotonicity_report(solve_coefficients({sol.t, sol.sigma, sol.x_star, sol.y_star}), sol.t).min_gprime;
  }
  return sol;
}

FeasibilityResult feasible(Modulus t, double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("feasibility needs s > 1");
  const double tv = t.value();

  const MonotonicityReport homogeneous = profile_check(tv, s, {0.0, 0.0});
  if (-homogeneous.min_gprime <= kFeasibilityTol) {
    return {true, 0.0, 0.0, std::max(0.0, -homogeneous.min_gprime)};
  }

  const CardinalBasis basis(t);
  FeasibilityResult previous = verdict_on_grid(basis, s, 256);
  for (std::size_t n = 512; n <= 8192; n *= 2) {
    FeasibilityResult current = verdict_on_grid(basis, s, n);
    if (current.feasible == previous.feasible) return current;
    previous = current;
  }
  return previous;
}

double sigma_bisection(Modulus t, double tol) {
  require_tolerance(tol);
  double lo = 1.0;
  double hi = sigma0(t);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible(t, mid).feasible) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SigmaEstimate certified_sigma(Modulus t, double tol) {
  SigmaEstimate est;
  est.minimax = sigma_minimax(t, tol);
  est.bisection = sigma_bisection(t, tol);
  est.uncertainty = std::abs(est.minimax.sigma - est.bisection);
  return est;
}

RadialCoefficients critical_homogeneous_map(Modulus t) {
  return solve_coefficients({t.value(), sigma0(t), 0.0, 0.0});
}

CriticalMap critical_map(Modulus t, double tol) {
  CriticalMap out;
  out.solution = sigma_minimax(t, tol);
  out.coeffs = solve_coefficients({out.solution.t, out.solution.sigma, out.solution.x_star, out.solution.y_star});
  return out;
}

}  // namespace biharm
