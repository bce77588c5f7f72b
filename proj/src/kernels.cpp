#include "biharm/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "biharm/errors.hpp"

namespace biharm::kernels {

namespace {

// Reductions run over fixed-size chunks so the combination order does not
// depend on the thread count.
constexpr std::size_t kChunk = 256;

bool beats_max(double candidate, double incumbent) {
  if (std::isnan(incumbent)) return false;
  return std::isnan(candidate) || candidate > incumbent;
}

bool beats_min(double candidate, double incumbent) {
  if (std::isnan(incumbent)) return false;
  return std::isnan(candidate) || candidate < incumbent;
}

template <class Better, class Value>
Extremum scan(std::size_t begin, std::size_t end, Better better, Value value) {
  Extremum best{value(begin), begin};
  for (std::size_t i = begin + 1; i < end; ++i) {
    const double v = value(i);
    if (better(v, best.value)) best = {v, i};
  }
  return best;
}

template <class Better, class Value>
Extremum chunked_scan(std::size_t n, Better better, Value value) {
  if (n == 0) throw DomainError("reduction over an empty range");
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<Extremum> partial(chunks);
  const auto count = static_cast<std::ptrdiff_t>(chunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
    partial[static_cast<std::size_t>(c)] = scan(begin, std::min(n, begin + kChunk), better, value);
  }
  Extremum best = partial.front();
  for (std::size_t c = 1; c < chunks; ++c) {
    if (better(partial[c].value, best.value)) best = partial[c];
  }
  return best;
}

void validate_radii(const CardinalBasis& basis, std::span<const double> radii) {
  for (double r : radii) {
    if (!(r >= 1.0 && r <= basis.t())) throw DomainError("ratio table radius outside [1, t]");
  }
}

RatioTable allocate(std::span<const double> radii) {
  RatioTable table;
  table.r.assign(radii.begin(), radii.end());
  table.ra.resize(radii.size());
  table.ru.resize(radii.size());
  table.rv.resize(radii.size());
  return table;
}

}  // namespace

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw DomainError("log_spaced needs n >= 2 and 0 < lo < hi");
  std::vector<double> out(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> open_linspace(double lo, double hi, std::size_t n) {
  if (n < 1 || !(hi > lo)) throw DomainError("open_linspace needs n >= 1 and lo < hi");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(n + 1);
  }
  return out;
}

namespace serial {

RatioTable tabulate_ratios(const CardinalBasis& basis, std::span<const double> radii) {
  validate_radii(basis, radii);
  RatioTable table = allocate(radii);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const RatioEval e = basis.ratios(radii[i]);
    table.ra[i] = e.ra;
    table.ru[i] = e.ru;
    table.rv[i] = e.rv;
  }
  return table;
}

Extremum affine_argmax(const RatioTable& table, double x, double y) {
  if (table.size() == 0) throw DomainError("reduction over an empty range");
  return scan(0, table.size(), beats_max,
              [&](std::size_t i) { return affine_ratio(table.ra[i], table.ru[i], table.rv[i], x, y); });
}

Extremum argmin(std::span<const double> values) {
  if (values.empty()) throw DomainError("reduction over an empty range");
  return scan(0, values.size(), beats_min, [&](std::size_t i) { return values[i]; });
}

Extremum argmax(std::span<const double> values) {
  if (values.empty()) throw DomainError("reduction over an empty range");
  return scan(0, values.size(), beats_max, [&](std::size_t i) { return values[i]; });
}

}  // namespace serial

namespace omp {

RatioTable tabulate_ratios(const CardinalBasis& basis, std::span<const double> radii) {
  validate_radii(basis, radii);
  RatioTable table = allocate(radii);
  const auto count = static_cast<std::ptrdiff_t>(radii.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const RatioEval e = basis.ratios(radii[i]);
    table.ra[i] = e.ra;
    table.ru[i] = e.ru;
    table.rv[i] = e.rv;
  }
  return table;
}

Extremum affine_argmax(const RatioTable& table, double x, double y) {
  return chunked_scan(table.size(), beats_max,
                      [&](std::size_t i) { return affine_ratio(table.ra[i], table.ru[i], table.rv[i], x, y); });
}

Extremum argmin(std::span<const double> values) {
  return chunked_scan(values.size(), beats_min, [&](std::size_t i) { return values[i]; });
}

Extremum argmax(std::span<const double> values) {
  return chunked_scan(values.size(), beats_max, [&](std::size_t i) { return values[i]; });
}

}  // namespace omp

RatioTable tabulate_ratios(const CardinalBasis& basis, std::span<const double> radii, Backend backend) {
  return backend == Backend::serial ? serial::tabulate_ratios(basis, radii) : omp::tabulate_ratios(basis, radii);
}

Extremum affine_argmax(const RatioTable& table, double x, double y, Backend backend) {
  return backend == Backend::serial ? serial::affine_argmax(table, x, y) : omp::affine_argmax(table, x, y);
}

}  // namespace biharm::kernels
