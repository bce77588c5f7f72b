#pragma once

// Serialisation of results to JSON and CSV, and standalone SVG line plots of
// the figure tables. Numbers are written with 9 significant digits in the C
// locale so that output is bit-identical across runs.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "biharm/nitsche_bounds.hpp"
#include "biharm/radial_maps.hpp"
#include "biharm/verification.hpp"

namespace biharm::reports {

using Json = nlohmann::ordered_json;

inline constexpr int kSignificantDigits = 9;

/// v with 9 significant digits in %g style; "inf", "-inf" and "nan" for
/// non-finite values.
[[nodiscard]] std::string format_number(double v);

/// v rounded to 9 significant digits. Non-finite values become the strings
/// "inf", "-inf" and "nan".
[[nodiscard]] Json number(double v);

/// Payload skeleton: {"version": ..., "command": ..., "inputs": inputs}.
[[nodiscard]] Json envelope(std::string_view command, Json inputs);

[[nodiscard]] Json to_json(const BasisEval& e);
[[nodiscard]] Json to_json(const RadialCoefficients& k);
[[nodiscard]] Json to_json(const MonotonicityReport& m);
[[nodiscard]] Json to_json(const MinimaxSolution& s);
[[nodiscard]] Json to_json(const FeasibilityResult& f);
[[nodiscard]] Json to_json(const verification::VerificationReport& r);
[[nodiscard]] Json to_json(const verification::Erratum& e);
[[nodiscard]] Json to_json(const verification::SuiteResult& s);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Header row then one line per row, comma separated, LF endings.
[[nodiscard]] std::string to_csv(const Table& table);

struct Series {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  int width = 800;
  int height = 600;
  /// Fixed y window; points outside it are clipped. Derived from the data
  /// when empty.
  std::optional<double> y_min;
  std::optional<double> y_max;
};

/// Self-contained SVG document with labelled axes and a legend.
[[nodiscard]] std::string to_svg(const Plot& plot);

struct FigureOneParams {
  double t = 1.5;
  std::size_t samples = 1000;
};

struct FigureTwoParams {
  double t_lo = 1.0;  // exclusive
  double t_hi = 3.0;  // inclusive
  std::size_t samples = 1000;
  bool with_sigma = false;
  double tol = 1e-8;
};

/// Columns r, minus_Uprime_over_Bprime, minus_Vprime_over_Bprime on an open
/// grid of (1, t).
[[nodiscard]] Table figure_one_table(const FigureOneParams& params);

/// Columns t, nitsche_n, sigma0 (and sigma when requested) at
/// t_i = t_lo + i (t_hi - t_lo)/samples, i = 1..samples.
[[nodiscard]] Table figure_two_table(const FigureTwoParams& params);

[[nodiscard]] Plot figure_one_plot(const Table& table, double t);
[[nodiscard]] Plot figure_two_plot(const Table& table);

}  // namespace biharm::reports
