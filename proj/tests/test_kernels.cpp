#include "doctest.h"

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "biharm/kernels.hpp"

using namespace biharm;
using namespace biharm::kernels;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("grids") {
  const auto g = log_spaced(1.0, 3.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 3.0);
  CHECK(g[2] == doctest::Approx(std::sqrt(3.0)));

  const auto o = open_linspace(1.0, 2.0, 3);
  REQUIRE(o.size() == 3);
  CHECK(o[0] == doctest::Approx(1.25));
  CHECK(o[2] == doctest::Approx(1.75));
  for (double r : open_linspace(1.0, 1.5, 999)) {
    CHECK(r > 1.0);
    CHECK(r < 1.5);
  }
}

TEST_CASE("serial and OpenMP ratio tables are bit-identical") {
  for (double t : {1.1, 2.0, 5.0}) {
    const CardinalBasis b{Modulus(t)};
    const auto radii = log_spaced(1.0, t, 10007);
    const RatioTable s = serial::tabulate_ratios(b, radii);
    const RatioTable p = omp::tabulate_ratios(b, radii);
    CHECK(bitwise_equal(s.r, p.r));
    CHECK(bitwise_equal(s.ra, p.ra));
    CHECK(bitwise_equal(s.ru, p.ru));
    CHECK(bitwise_equal(s.rv, p.rv));
  }
}

TEST_CASE("serial and OpenMP reductions agree on value and index") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(0, 20);
  for (std::size_t n : {1u, 2u, 255u, 256u, 257u, 5000u}) {
    std::vector<double> v(n);
    for (double& x : v) x = small(rng);  // many ties
    const Extremum smin = serial::argmin(v), pmin = omp::argmin(v);
    const Extremum smax = serial::argmax(v), pmax = omp::argmax(v);
    CHECK(smin.index == pmin.index);
    CHECK(smin.value == pmin.value);
    CHECK(smax.index == pmax.index);
    CHECK(smax.value == pmax.value);
  }
}

TEST_CASE("reductions resolve ties to the smallest index and let NaN win") {
  const std::vector<double> ties{3.0, 1.0, 5.0, 1.0, 5.0};
  CHECK(omp::argmin(ties).index == 1);
  CHECK(omp::argmax(ties).index == 2);
  CHECK(serial::argmin(ties).index == 1);
  CHECK(serial::argmax(ties).index == 2);

  std::vector<double> with_nan(1000, 1.0);
  with_nan[700] = std::nan("");
  with_nan[10] = -5.0;
  CHECK(omp::argmin(with_nan).index == 700);
  CHECK(serial::argmin(with_nan).index == 700);
  CHECK(std::isnan(omp::argmax(with_nan).value));
}

TEST_CASE("affine argmax agrees across backends and with a direct scan") {
  const CardinalBasis b{Modulus(2.0)};
  const RatioTable table = serial::tabulate_ratios(b, log_spaced(1.0, 2.0, 4097));
  for (auto [x, y] : {std::pair{0.0, 0.0}, std::pair{0.0, 0.01}, std::pair{0.02, 0.0}, std::pair{0.005, 0.005}}) {
    const Extremum s = serial::affine_argmax(table, x, y);
    const Extremum p = omp::affine_argmax(table, x, y);
    CHECK(s.index == p.index);
    CHECK(s.value == p.value);
    double best = -INFINITY;
    for (std::size_t i = 0; i < table.size(); ++i) {
      best = std::max(best, affine_ratio(table.ra[i], table.ru[i], table.rv[i], x, y));
    }
    CHECK(s.value == best);
  }
}

TEST_CASE("tabulate keeps index order") {
  const auto f = [](std::size_t i) { return std::sin(static_cast<double>(i)); };
  CHECK(bitwise_equal(serial::tabulate(3001, f), omp::tabulate(3001, f)));
  CHECK(bitwise_equal(tabulate(17, f, Backend::serial), tabulate(17, f, Backend::openmp)));
}
