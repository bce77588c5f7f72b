#include "biharm/reference_formulas.hpp"

#include <cmath>
#include <stdexcept>


namespace biharm::reference {

namespace {

double lam(double t) { return 1.0 - t * t + (1.0 + t * t) * std::log(t); }

double sq(double v) { return v * v; }

}  // namespace

double printed_dA(double r, double t) {
  const double lr = std::log(r);
  const double lt = std::log(t);
  const double r2 = r * r;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  return (2.0 * r2 * (3.0 - 2.0 * t2 - t4) * lr +
          (r2 - 1.0) * (3.0 * (r2 - t2) * (-1.0 + t2) + 2.0 * (3.0 * r2 + t4) * lt)) /
         (4.0 * r2 * (-1.0 + t2) * lam(t));
}

double printed_dB(double r, double t) {
  const double lr = std::log(r);
  const double lt = std::log(t);
  const double r2 = r * r;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  return (2.0 * r2 * (3.0 * t4 - 2.0 * t2 - 1.0) * lr +
          (1.0 - r2) * (3.0 * (r2 - t2) * (-1.0 + t2) + 2.0 * (1.0 + 3.0 * r2) * t2 * lt)) /
         (4.0 * r2 * t * (-1.0 + t2) * lam(t));
}

double printed_dU(double r, double t) {
  const double lr = std::log(r);
  const double lt = std::log(t);
  const double r2 = r * r;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  return ((1.0 + 3.0 * r2) * (r2 - t2) * (t2 - 1.0) + 2.0 * r2 * sq(1.0 - t2) * lr -
          2.0 * (3.0 * r2 * r2 - t4 - r2 * (1.0 + t4)) * lt) /
         (4.0 * r2 * (-1.0 + t2) * lam(t));
}

double printed_dV(double r, double t) {
  const double lr = std::log(r);
  const double lt = std::log(t);
  const double r2 = r * r;
  const double t2 = t * t;
  return (2.0 * r2 * sq(1.0 - t2) * lr +
          (1.0 - r2) * ((-1.0 + t2) * (3.0 * r2 + t2) + 2.0 * (1.0 + 3.0 * r2) * t2 * lt)) /
         (4.0 * r2 * (-1.0 + t2) * lam(t));
}

double printed_h0(double r, double t) {
  const double lr = std::log(r);
  const double lt = std::log(t);
  const double r2 = r * r;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const double den = 4.0 * r * (2.0 - 2.0 * t2 + lt + 3.0 * t4 * lt);
  return (1.0 - t2) * (3.0 * t2 + 3.0 * (3.0 - t2) * r2 - r2 * r2) / den +
         ((6.0 * t4 + 6.0 * (1.0 + t4) * r2 - 2.0 * r2 * r2) * lt + 6.0 * sq(1.0 - t2) * r2 * lr) / den;
}

double uv_difference(double r, double t) {
  const double r2 = r * r;
  const double t2 = t * t;
  return (-3.0 * r2 * r2 + t2 + r2 * (1.0 + t2)) / (2.0 * r2 * (-1.0 + t2));
}

double rho_inverse(double rho) {
  const double p2 = rho * rho;
  return rho * std::sqrt(-1.0 + 3.0 * p2) / std::sqrt(1.0 + p2);
}

double kernel_inequality(char item, double r, double t) {
  const double lr = std::log(r);
  const double lt = std::log(t);
  const double r2 = r * r;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  switch (item) {
    case 'a':
      return 2.0 * r2 * (-1.0 - 2.0 * t2 + 3.0 * t4) * lr +
             (1.0 - r2) * (3.0 * (r2 - t2) * (-1.0 + t2) + 2.0 * (1.0 + 3.0 * r2) * t2 * lt);
    case 'b':
      return -2.0 * r2 * (-3.0 + 2.0 * t2 + t4) * lr +
             (r2 - 1.0) * (3.0 * (r2 - t2) * (-1.0 + t2) + 2.0 * (3.0 * r2 + t4) * lt);
    case 'c':
      return (-1.0 + t2) * (3.0 * (-1.0 + r2) * (-r2 + t2) + 2.0 * r2 * (1.0 + 3.0 * t2) * lr) +
             2.0 * (1.0 + 2.0 * r2 - 3.0 * r2 * r2) * t2 * lt;
    case 'd':
      return 2.0 * (r2 * r2 - t2) * (t2 - 1.0) * lr +
             (1.0 - r2) * ((r2 - t2) * (-1.0 + t2) + 2.0 * (r2 - 1.0) * t2 * lt);
    case 'e':
      return 1.0 - t2 + (1.0 + t2) * lt;
    default:
      throw std::invalid_argument("kernel inequality item must be one of a..e");
  }
}

int kernel_inequality_sign(char item) {
  switch (item) {
    case 'a':
    case 'c':
    case 'd':
    case 'e':
      return 1;
    case 'b':
      return -1;
    default:
      throw std::invalid_argument("kernel inequality item must be one of a..e");
  }
}

double phi(double t) {
  const double tau = 0.5 * (1.0 + t);
  return (1.0 - t * t) * (9.0 + 30.0 * t + 9.0 * t * t + 8.0 * sq(1.0 + t) * std::log(tau)) -
         2.0 * t * (9.0 + 18.0 * t + 17.0 * t * t + 4.0 * t * t * t) * std::log(t);
}

double K(double kappa) {
  const double k = kappa;
  return -2.0 - 4.0 * k + 6.0 * k * k + (-1.0 - 2.0 * k + 3.0 * k * k) * std::log(k) +
         (1.0 - 2.0 * k - 3.0 * k * k) * std::log(k * (-1.0 + 3.0 * k) / (1.0 + k));
}

double L(double kappa) {
  const double k = kappa;
  const double eta = k * (3.0 * k - 1.0) / (1.0 + k);
  return (1.0 + 3.0 * k) * (k - eta) * (-1.0 + eta) - k * sq(-1.0 + eta) * std::log(k) +
         (k - 3.0 * k * k + eta * eta + k * eta * eta) * std::log(eta);
}

double L_factored(double kappa) {
  const double k = kappa;
  return k * (-1.0 - 2.0 * k + 3.0 * k * k) / sq(1.0 + k) * K(k);
}

}  // namespace biharm::reference
