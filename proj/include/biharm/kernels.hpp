#pragma once

// Data-parallel grid kernels. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp; both produce
// bit-identical output (pointwise work is independent and reductions resolve
// ties towards the smallest index).

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "biharm/basis_kernel.hpp"

namespace biharm::kernels {

enum class Backend { serial, openmp };

/// Ratios -A'/B', -U'/B', -V'/B' sampled at fixed radii (endpoint limits
/// substituted inside the endpoint band).
struct RatioTable {
  std::vector<double> r;
  std::vector<double> ra;
  std::vector<double> ru;
  std::vector<double> rv;

  [[nodiscard]] std::size_t size() const noexcept { return r.size(); }
};

/// Result of an arg-extremum reduction. NaN entries win so they cannot hide.
struct Extremum {
  double value = 0.0;
  std::size_t index = 0;
};

/// n points from lo to hi inclusive, uniform in log r.
[[nodiscard]] std::vector<double> log_spaced(double lo, double hi, std::size_t n);
/// n points strictly inside (lo, hi), uniform.
[[nodiscard]] std::vector<double> open_linspace(double lo, double hi, std::size_t n);

namespace serial {

[[nodiscard]] RatioTable tabulate_ratios(const CardinalBasis& basis, std::span<const double> radii);
[[nodiscard]] Extremum affine_argmax(const RatioTable& table, double x, double y);
[[nodiscard]] Extremum argmin(std::span<const double> values);
[[nodiscard]] Extremum argmax(std::span<const double> values);

/// out[i] = f(i). f must not throw.
template <class F>
[[nodiscard]] std::vector<double> tabulate(std::size_t n, F&& f) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

}  // namespace serial

namespace omp {

[[nodiscard]] RatioTable tabulate_ratios(const CardinalBasis& basis, std::span<const double> radii);
[[nodiscard]] Extremum affine_argmax(const RatioTable& table, double x, double y);
[[nodiscard]] Extremum argmin(std::span<const double> values);
[[nodiscard]] Extremum argmax(std::span<const double> values);

template <class F>
[[nodiscard]] std::vector<double> tabulate(std::size_t n, F&& f) {
  std::vector<double> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  return out;
}

}  // namespace omp

// Backend dispatch.
[[nodiscard]] RatioTable tabulate_ratios(const CardinalBasis& basis, std::span<const double> radii,
                                         Backend backend = Backend::openmp);
[[nodiscard]] Extremum affine_argmax(const RatioTable& table, double x, double y,
                                     Backend backend = Backend::openmp);

template <class F>
[[nodiscard]] std::vector<double> tabulate(std::size_t n, F&& f, Backend backend = Backend::openmp) {
  return backend == Backend::serial ? serial::tabulate(n, f) : omp::tabulate(n, f);
}

}  // namespace biharm::kernels
