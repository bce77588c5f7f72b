#pragma once

// Cardinal basis A, B, U, V for radial bi-harmonic profiles on [1, t].
//
// Every profile g(r) = d/r + a r + b r log r + c r^3 with g(1) = 1, g(t) = s,
// g'(1) = x, g'(t) = y decomposes as g = A + B s + U x + V y. Each basis member
// is stored as a numerator in {1, r^2, r^4, r^2 log r} over a common
// denominator den * r, so first and second derivatives are exact.

#include <array>
#include <limits>

namespace biharm {

/// Smallest admissible distance of t above 1. Lambda(t) ~ (2/3)(t-1)^3
/// loses all significant digits below this.
inline constexpr double kModulusGuard = 1e-3;

/// Within this distance of r = 1 or r = t the ratio functions switch to
/// their endpoint limits (0/0 there).
inline constexpr double kEndpointBand = 1e-8;

/// Within kTaylorBand * (t - 1) of an endpoint, the vanishing derivatives in
/// the ratio functions are replaced by their Taylor expansions about that
/// endpoint. The direct quotient cancels catastrophically there.
inline constexpr double kTaylorBand = 1e-3;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Outer radius t of the domain annulus 1 < |z| < t. Construction enforces
/// t >= 1 + kModulusGuard.
class Modulus {
 public:
  explicit Modulus(double t);

  [[nodiscard]] double value() const noexcept { return t_; }

 private:
  double t_;
};

/// Denominators shared by the basis and its endpoint limits.
struct KernelConstants {
  double lambda;  // 1 - t^2 + (1 + t^2) log t, positive for t > 1
  double delta;   // 2 - 2t^2 + log t + 3t^4 log t
  double theta;   // 1 - 4t^2 + 3t^4 - 4t^2 log t
};

[[nodiscard]] KernelConstants kernel_constants(Modulus t);

/// 1 - t^2 + (1 + t^2) log t without cancellation near t = 1.
[[nodiscard]] double lambda_of(double t);

/// (p0 + p2 r^2 + p4 r^4 + q r^2 log r) / (den r)
struct CardinalTerm {
  double p0 = 0.0;
  double p2 = 0.0;
  double p4 = 0.0;
  double q = 0.0;
  double den = 1.0;

  [[nodiscard]] double value(double r, double log_r) const noexcept {
    return (p0 / r + p2 * r + p4 * r * r * r + q * r * log_r) / den;
  }
  [[nodiscard]] double first(double r, double log_r) const noexcept {
    return (-p0 / (r * r) + p2 + 3.0 * p4 * r * r + q * (1.0 + log_r)) / den;
  }
  [[nodiscard]] double second(double r) const noexcept {
    return (2.0 * p0 / (r * r * r) + 6.0 * p4 * r + q / r) / den;
  }
  [[nodiscard]] double third(double r) const noexcept {
    return (-6.0 * p0 / (r * r * r * r) + 6.0 * p4 - q / (r * r)) / den;
  }
  [[nodiscard]] double fourth(double r) const noexcept {
    return (24.0 * p0 / (r * r * r * r * r) + 2.0 * q / (r * r * r)) / den;
  }
  [[nodiscard]] double fifth(double r) const noexcept {
    const double r2 = r * r;
    return (-120.0 * p0 / (r2 * r2 * r2) - 6.0 * q / (r2 * r2)) / den;
  }
};

struct BasisEval {
  double r = 0.0;
  double t = 0.0;
  double A = 0.0, B = 0.0, U = 0.0, V = 0.0;
  double dA = 0.0, dB = 0.0, dU = 0.0, dV = 0.0;
  double d2A = 0.0, d2B = 0.0, d2U = 0.0, d2V = 0.0;
  bool at_limit = false;
};

/// Quotients -A'/B', -U'/B', -V'/B'. Infinite only when taken from a
/// divergent endpoint limit.
struct RatioEval {
  double r = 0.0;
  double t = 0.0;
  double ra = 0.0;
  double ru = 0.0;
  double rv = 0.0;
  bool at_limit = false;
};

struct EndpointLimits {
  double ra_inner;  // r -> 1+
  double ru_inner;  // -inf
  double rv_inner;
  double ra_outer;  // r -> t-, equals sigma0(t)
  double ru_outer;
  double rv_outer;  // -inf
};

/// ra + x ru + y rv with the convention 0 * (+-inf) = 0, so a zero speed
/// switches its term off even at a divergent endpoint.
[[nodiscard]] inline double affine_ratio(double ra, double ru, double rv, double x,
                                         double y) noexcept {
  double v = ra;
  if (x != 0.0) v += x * ru;
  if (y != 0.0) v += y * rv;
  return v;
}

/// The four cardinal functions for one modulus. Cheap to copy; all queries are
/// const and thread-safe.
class CardinalBasis {
 public:
  explicit CardinalBasis(Modulus t);

  [[nodiscard]] double t() const noexcept { return t_; }
  [[nodiscard]] const KernelConstants& constants() const noexcept { return k_; }
  [[nodiscard]] const CardinalTerm& A() const noexcept { return terms_[0]; }
  [[nodiscard]] const CardinalTerm& B() const noexcept { return terms_[1]; }
  [[nodiscard]] const CardinalTerm& U() const noexcept { return terms_[2]; }
  [[nodiscard]] const CardinalTerm& V() const noexcept { return terms_[3]; }

  [[nodiscard]] BasisEval values(double r) const;
  [[nodiscard]] BasisEval derivatives(double r) const;
  [[nodiscard]] RatioEval ratios(double r) const;
  [[nodiscard]] const EndpointLimits& limits() const noexcept { return limits_; }

  /// Interior quotients with no range check or endpoint substitution. Callers
  /// must stay strictly inside (1, t).
  [[nodiscard]] RatioEval raw_ratios(double r) const noexcept;

 private:
  // Derivatives 2..5 of each term at one endpoint, in the order A, B, U, V.
  using Jet = std::array<std::array<double, 4>, 4>;

  void check_radius(double r) const;
  [[nodiscard]] RatioEval taylor_ratios(double r, double endpoint, const Jet& jet) const noexcept;

  double t_;
  KernelConstants k_;
  std::array<CardinalTerm, 4> terms_;
  EndpointLimits limits_;
  Jet inner_jet_;
  Jet outer_jet_;
};

[[nodiscard]] BasisEval eval_basis(double r, Modulus t);
[[nodiscard]] BasisEval eval_basis_derivatives(double r, Modulus t);
[[nodiscard]] RatioEval ratio_functions(double r, Modulus t);
[[nodiscard]] EndpointLimits endpoint_limits(Modulus t);

}  // namespace biharm
