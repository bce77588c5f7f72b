#pragma once

#include <cmath>
#include <cstddef>

namespace biharm::detail {

struct LineOptimum {
  double x = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;  // final bracket narrower than tol
};

/// Golden-section minimisation of a unimodal f on [a, b]. Stops once the
/// bracket is narrower than tol or after max_iter shrink steps. The returned
/// point is the best one evaluated, including both ends of the initial bracket
/// when include_ends is set.
template <class F>
LineOptimum golden_section_min(F&& f, double a, double b, double tol, std::size_t max_iter = 200,
                               bool include_ends = false) {
  constexpr double inv_phi = 0.6180339887498949;
  LineOptimum best{a, 0.0, 0};
  bool have_best = false;
  const auto consider = [&](double x, double v) {
    if (!have_best || v < best.value) {
      best.x = x;
      best.value = v;
      have_best = true;
    }
  };
  std::size_t evals = 0;
  if (include_ends) {
    consider(a, f(a));
    consider(b, f(b));
    evals += 2;
  }
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  evals += 2;
  consider(c, fc);
  consider(d, fd);
  for (std::size_t it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
    ++evals;
  }
  best.evaluations = evals;
  best.converged = (b - a) <= tol;
  return best;
}

template <class F>
LineOptimum golden_section_max(F&& f, double a, double b, double tol, std::size_t max_iter = 200,
                               bool include_ends = false) {
  LineOptimum m = golden_section_min([&](double x) { return -f(x); }, a, b, tol, max_iter, include_ends);
  m.value = -m.value;
  return m;
}

}  // namespace biharm::detail
