#include "biharm/basis_kernel.hpp"

#include <cmath>
#include <utility>
#include <sstream>

#include "biharm/errors.hpp"

namespace biharm {

Modulus::Modulus(double t) : t_(t) {
  if (!(t >= 1.0 + kModulusGuard) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << "modulus t = " << t << " is below the guard 1 + " << kModulusGuard;
    throw DomainError(msg.str());
  }
}

double lambda_of(double t) {
  const double w = std::log(t);
  if (w >= 0.05) return 1.0 - t * t + (1.0 + t * t) * w;
  // With t = e^w: Lambda = sum_{n>=3} 2^{n-1} (n-2) / n! * w^n.
  double sum = 0.0;
  double pow_w = w * w * w;
  double coeff = 4.0 / 6.0;  // 2^2 * 1 / 3!
  for (int n = 3; n < 40; ++n) {
    const double term = coeff * pow_w;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    // c_{n+1} / c_n = 2 (n - 1) / ((n + 1) (n - 2))
    coeff *= 2.0 * (n - 1) / (static_cast<double>(n + 1) * (n - 2));
    pow_w *= w;
  }
  return sum;
}

KernelConstants kernel_constants(Modulus modulus) {
  const double t = modulus.value();
  const double t2 = t * t;
  const double lt = std::log(t);
  return {lambda_of(t), 2.0 - 2.0 * t2 + lt + 3.0 * t2 * t2 * lt,
          1.0 - 4.0 * t2 + 3.0 * t2 * t2 - 4.0 * t2 * lt};
}

CardinalBasis::CardinalBasis(Modulus modulus) : t_(modulus.value()), k_(kernel_constants(modulus)) {
  const double t = t_;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const double lt = std::log(t);
  const double m = t2 - 1.0;
  const double den = 4.0 * m * k_.lambda;

  CardinalTerm& a = terms_[0];
  a.p0 = -3.0 * t2 * m + 2.0 * lt * t4;
  a.p2 = m * (3.0 - t2) + 2.0 * lt * (t4 - 3.0);
  a.p4 = m + 2.0 * lt;
  a.q = 2.0 * (3.0 - 2.0 * t2 - t4);
  a.den = den;

  // B, U, V numerators share the shape (r^2 - 1)(c2 r^2 + c0) + q r^2 log r.
  const auto factored = [](double c2, double c0, double q, double d) {
    return CardinalTerm{-c0, c0 - c2, c2, q, d};
  };
  {
    const double c2 = m + 2.0 * t2 * lt;
    const double c0 = 3.0 * t2 * m - 2.0 * t2 * lt;
    terms_[1] = factored(-c2, -c0, 2.0 * (3.0 * t4 - 2.0 * t2 - 1.0), den * t);
  }
  {
    const double c2 = m - 2.0 * lt;
    const double c0 = -t2 * m + 2.0 * t4 * lt;
    terms_[2] = factored(c2, c0, -2.0 * m * m, den);
  }
  {
    const double c2 = -m + 2.0 * t2 * lt;
    const double c0 = t2 * m - 2.0 * t2 * lt;
    terms_[3] = factored(c2, c0, -2.0 * m * m, den);
  }

  const double shared = t * (t4 - 1.0 - 4.0 * t2 * lt);
  limits_.ra_outer = t * (3.0 - 4.0 * t2 + t4 + 4.0 * t2 * lt) / k_.delta;
  limits_.ru_outer = shared / k_.delta;
  limits_.rv_outer = -kInfinity;
  limits_.ra_inner = -t * (-2.0 * t2 * m + (3.0 + t4) * lt) / k_.theta;
  limits_.ru_inner = -kInfinity;
  limits_.rv_inner = shared / k_.theta;

  for (std::size_t i = 0; i < 4; ++i) {
    for (auto [jet, e] : {std::pair{&inner_jet_, 1.0}, std::pair{&outer_jet_, t}}) {
      (*jet)[i] = {terms_[i].second(e), terms_[i].third(e), terms_[i].fourth(e), terms_[i].fifth(e)};
    }
  }
}

void CardinalBasis::check_radius(double r) const {
  if (!(r >= 1.0 && r <= t_)) {
    std::ostringstream msg;
    msg << "radius r = " << r << " outside [1, " << t_ << "]";
    throw DomainError(msg.str());
  }
}

BasisEval CardinalBasis::values(double r) const {
  check_radius(r);
  const double lr = std::log(r);
  BasisEval e;
  e.r = r;
  e.t = t_;
  e.A = A().value(r, lr);
  e.B = B().value(r, lr);
  e.U = U().value(r, lr);
  e.V = V().value(r, lr);
  return e;
}

BasisEval CardinalBasis::derivatives(double r) const {
  BasisEval e = values(r);
  const double lr = std::log(r);
  e.dA = A().first(r, lr);
  e.dB = B().first(r, lr);
  e.dU = U().first(r, lr);
  e.dV = V().first(r, lr);
  e.d2A = A().second(r);
  e.d2B = B().second(r);
  e.d2U = U().second(r);
  e.d2V = V().second(r);
  return e;
}

RatioEval CardinalBasis::raw_ratios(double r) const noexcept {
  const double lr = std::log(r);
  const double db = B().first(r, lr);
  return {r, t_, -A().first(r, lr) / db, -U().first(r, lr) / db, -V().first(r, lr) / db, false};
}

// A' and B' vanish at both endpoints, U' at t and V' at 1. For those the
// quotient uses X'(e + h) / h from the Taylor jet, so the common factor h
// cancels exactly. The nonvanishing numerator is evaluated directly.
RatioEval CardinalBasis::taylor_ratios(double r, double endpoint, const Jet& jet) const noexcept {
  const double h = r - endpoint;
  const auto slope = [&](std::size_t i) {
    const auto& d = jet[i];
    return d[0] + h * (d[1] / 2.0 + h * (d[2] / 6.0 + h * d[3] / 24.0));
  };
  const double sb = slope(1);
  const double ra = -slope(0) / sb;
  const double lr = std::log(r);
  if (endpoint == 1.0) return {r, t_, ra, -U().first(r, lr) / (h * sb), -slope(3) / sb, false};
  return {r, t_, ra, -slope(2) / sb, -V().first(r, lr) / (h * sb), false};
}

RatioEval CardinalBasis::ratios(double r) const {
  check_radius(r);
  if (r - 1.0 <= kEndpointBand) {
    return {r, t_, limits_.ra_inner, limits_.ru_inner, limits_.rv_inner, true};
  }
  if (t_ - r <= kEndpointBand) {
    return {r, t_, limits_.ra_outer, limits_.ru_outer, limits_.rv_outer, true};
  }
  const double band = kTaylorBand * (t_ - 1.0);
  if (r - 1.0 < band) return taylor_ratios(r, 1.0, inner_jet_);
  if (t_ - r < band) return taylor_ratios(r, t_, outer_jet_);
  return raw_ratios(r);
}

BasisEval eval_basis(double r, Modulus t) { return CardinalBasis(t).values(r); }

BasisEval eval_basis_derivatives(double r, Modulus t) { return CardinalBasis(t).derivatives(r); }

RatioEval ratio_functions(double r, Modulus t) { return CardinalBasis(t).ratios(r); }

EndpointLimits endpoint_limits(Modulus t) { return CardinalBasis(t).limits(); }

}  // namespace biharm
