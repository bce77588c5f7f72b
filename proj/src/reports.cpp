#include "biharm/reports.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "biharm/basis_kernel.hpp"
#include "biharm/errors.hpp"
#include "biharm/kernels.hpp"

#ifndef BIHARM_VERSION
#define BIHARM_VERSION "0.0.0"
#endif

namespace biharm::reports {

namespace {

std::string chars(double v, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, fmt, precision);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return {buf.data(), end};
}

std::string coord(double v) { return chars(v, std::chars_format::fixed, 2); }

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Roughly `target` round-valued ticks covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target) {
  const double span = hi - lo;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) {
    ticks.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
  }
  return ticks;
}

std::string tick_label(double v) { return chars(v, std::chars_format::general, 6); }

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return chars(v, std::chars_format::general, kSignificantDigits);
}

Json number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  const std::string rounded = chars(v, std::chars_format::general, kSignificantDigits);
  double back = 0.0;
  std::from_chars(rounded.data(), rounded.data() + rounded.size(), back);
  return back;
}

Json envelope(std::string_view command, Json inputs) {
  Json j;
  j["version"] = BIHARM_VERSION;
  j["command"] = std::string(command);
  j["inputs"] = std::move(inputs);
  return j;
}

Json to_json(const BasisEval& e) {
  return Json{{"r", number(e.r)},     {"t", number(e.t)},     {"A", number(e.A)},     {"B", number(e.B)},
              {"U", number(e.U)},     {"V", number(e.V)},     {"dA", number(e.dA)},   {"dB", number(e.dB)},
              {"dU", number(e.dU)},   {"dV", number(e.dV)},   {"d2A", number(e.d2A)}, {"d2B", number(e.d2B)},
              {"d2U", number(e.d2U)}, {"d2V", number(e.d2V)}, {"at_limit", e.at_limit}};
}

Json to_json(const RadialCoefficients& k) {
  return Json{{"d", number(k.d)}, {"a", number(k.a)}, {"b", number(k.b)}, {"c", number(k.c)}, {"phi", number(k.phi)}};
}

Json to_json(const MonotonicityReport& m) {
  return Json{{"min_gprime", number(m.min_gprime)},
              {"argmin_r", number(m.argmin_r)},
              {"is_diffeomorphism", m.is_diffeomorphism},
              {"samples", m.samples}};
}

Json to_json(const MinimaxSolution& s) {
  return Json{{"t", number(s.t)},
              {"sigma", number(s.sigma)},
              {"x_star", number(s.x_star)},
              {"y_star", number(s.y_star)},
              {"r_star", number(s.r_star)},
              {"iterations", s.iterations},
              {"status", std::string(to_string(s.status))},
              {"certificate_min_gprime", number(s.certificate)}};
}

Json to_json(const FeasibilityResult& f) {
  Json j{{"feasible", f.feasible}, {"max_violation", number(f.max_violation)}};
  if (f.feasible) {
    j["witness_x"] = number(f.witness_x);
    j["witness_y"] = number(f.witness_y);
  }
  return j;
}

Json to_json(const verification::VerificationReport& r) {
  Json j{{"check", r.check_name},
         {"passed", r.passed},
         {"worst_residual", number(r.worst_residual)},
         {"worst_r", number(r.worst_location.r)},
         {"worst_t", number(r.worst_location.t)},
         {"samples", r.samples},
         {"detail", r.detail}};
  if (!r.erratum.empty()) j["erratum"] = r.erratum;
  return j;
}

Json to_json(const verification::Erratum& e) {
  return Json{{"id", e.id}, {"display", e.display}, {"finding", e.finding}};
}

Json to_json(const verification::SuiteResult& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  Json errata = Json::array();
  for (const auto& e : s.errata) errata.push_back(to_json(e));
  return Json{{"passed", s.passed}, {"reports", std::move(reports)}, {"errata", std::move(errata)}};
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::logic_error("CSV row width differs from header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_svg(const Plot& plot) {
  constexpr double kLeft = 90.0, kRight = 30.0, kTop = 50.0, kBottom = 70.0;
  const double w = plot.width, h = plot.height;
  const double pw = w - kLeft - kRight, ph = h - kTop - kBottom;

  double x_lo = kInfinity, x_hi = -kInfinity, y_lo = kInfinity, y_hi = -kInfinity;
  for (const Series& s : plot.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  }
  if (!(x_lo < x_hi)) {
    x_lo = 0.0;
    x_hi = 1.0;
  }
  if (plot.y_min) y_lo = *plot.y_min;
  if (plot.y_max) y_hi = *plot.y_max;
  if (!(y_lo < y_hi)) {
    const double c = std::isfinite(y_lo) ? y_lo : 0.0;
    y_lo = c - 1.0;
    y_hi = c + 1.0;
  }
  if (!plot.y_min || !plot.y_max) {
    const double pad = 0.05 * (y_hi - y_lo);
    if (!plot.y_min) y_lo -= pad;
    if (!plot.y_max) y_hi += pad;
  }
  const auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  const auto sy = [&](double y) {
    const double span = y_hi - y_lo;
    return kTop + (y_hi - std::clamp(y, y_lo - span, y_hi + span)) / span * ph;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(plot.width) + "\" height=\"" +
         std::to_string(plot.height) + "\" viewBox=\"0 0 " + std::to_string(plot.width) + " " +
         std::to_string(plot.height) + "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<defs><clipPath id=\"plot-area\"><rect x=\"" + coord(kLeft) + "\" y=\"" + coord(kTop) + "\" width=\"" +
         coord(pw) + "\" height=\"" + coord(ph) + "\"/></clipPath></defs>\n";
  svg += "<text x=\"" + coord(w / 2) + "\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">" +
         escape_xml(plot.title) + "</text>\n";

  svg += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  const auto xt = nice_ticks(x_lo, x_hi, 8);
  const auto yt = nice_ticks(y_lo, y_hi, 8);
  for (double v : xt) {
    svg += "<line x1=\"" + coord(sx(v)) + "\" y1=\"" + coord(kTop) + "\" x2=\"" + coord(sx(v)) + "\" y2=\"" +
           coord(kTop + ph) + "\"/>\n";
  }
  for (double v : yt) {
    svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(sy(v)) + "\" x2=\"" + coord(kLeft + pw) + "\" y2=\"" +
           coord(sy(v)) + "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<rect x=\"" + coord(kLeft) + "\" y=\"" + coord(kTop) + "\" width=\"" + coord(pw) + "\" height=\"" +
         coord(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  svg += "<g text-anchor=\"middle\">\n";
  for (double v : xt) {
    svg += "<text x=\"" + coord(sx(v)) + "\" y=\"" + coord(kTop + ph + 20) + "\">" + tick_label(v) + "</text>\n";
  }
  svg += "</g>\n<g text-anchor=\"end\">\n";
  for (double v : yt) {
    svg += "<text x=\"" + coord(kLeft - 8) + "\" y=\"" + coord(sy(v) + 4) + "\">" + tick_label(v) + "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"" + coord(kLeft + pw / 2) + "\" y=\"" + coord(h - 20) + "\" text-anchor=\"middle\">" +
         escape_xml(plot.x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + coord(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         coord(kTop + ph / 2) + ")\">" + escape_xml(plot.y_label) + "</text>\n";

  svg += "<g clip-path=\"url(#plot-area)\" fill=\"none\" stroke-width=\"2\">\n";
  for (const Series& s : plot.series) {
    std::string points;
    const auto flush = [&] {
      if (!points.empty()) {
        svg += "<polyline stroke=\"" + s.color + "\" points=\"" + points + "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += coord(sx(s.x[i])) + "," + coord(sy(s.y[i]));
    }
    flush();
  }
  svg += "</g>\n";

  std::size_t longest = 0;
  for (const Series& s : plot.series) longest = std::max(longest, s.label.size());
  const double lx = kLeft + pw - 60.0 - 7.5 * static_cast<double>(longest);
  double ly = kTop + 20;
  for (const Series& s : plot.series) {
    svg += "<line x1=\"" + coord(lx) + "\" y1=\"" + coord(ly) + "\" x2=\"" + coord(lx + 30) + "\" y2=\"" +
           coord(ly) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + coord(lx + 38) + "\" y=\"" + coord(ly + 4) + "\">" + escape_xml(s.label) + "</text>\n";
    ly += 20;
  }
  svg += "</svg>\n";
  return svg;
}

Table figure_one_table(const FigureOneParams& params) {
  const CardinalBasis basis{Modulus(params.t)};
  if (params.samples < 2) throw DomainError("figure 1 needs at least 2 samples");
  const auto radii = kernels::open_linspace(1.0, params.t, params.samples);
  const kernels::RatioTable ratios = kernels::tabulate_ratios(basis, radii, kernels::Backend::openmp);
  Table table{{"r", "minus_Uprime_over_Bprime", "minus_Vprime_over_Bprime"}, {}};
  table.rows.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) table.rows.push_back({ratios.r[i], ratios.ru[i], ratios.rv[i]});
  return table;
}

Table figure_two_table(const FigureTwoParams& params) {
  if (!(params.t_lo >= 1.0 && params.t_hi > params.t_lo)) throw DomainError("figure 2 needs 1 <= t_lo < t_hi");
  if (params.samples < 1) throw DomainError("figure 2 needs at least 1 sample");
  const std::size_t n = params.samples;
  const auto t_at = [&](std::size_t i) {
    return params.t_lo + static_cast<double>(i + 1) * (params.t_hi - params.t_lo) / static_cast<double>(n);
  };
  // Validates every modulus before any work so a bad range fails fast.
  for (std::size_t i = 0; i < n; ++i) (void)Modulus(t_at(i));

  const auto sigma0_col = kernels::tabulate(n, [&](std::size_t i) { return sigma0(Modulus(t_at(i))); });
  std::vector<double> sigma_col;
  if (params.with_sigma) {
    sigma_col.resize(n);
    for (std::size_t i = 0; i < n; ++i) sigma_col[i] = sigma_minimax(Modulus(t_at(i)), params.tol).sigma;
  }

  Table table{{"t", "nitsche_n", "sigma0"}, {}};
  if (params.with_sigma) table.columns.emplace_back("sigma");
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_at(i);
    std::vector<double> row{t, nitsche_bound(t), sigma0_col[i]};
    if (params.with_sigma) row.push_back(sigma_col[i]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::vector<double> column(const Table& table, std::size_t k) {
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.push_back(row.at(k));
  return out;
}

}  // namespace

Plot figure_one_plot(const Table& table, double t) {
  Plot plot;
  plot.title = "-U'(r)/B'(r) and -V'(r)/B'(r), t = " + format_number(t);
  plot.x_label = "r";
  plot.y_label = "ratio";
  const auto r = column(table, 0);
  const auto ru = column(table, 1);
  const auto rv = column(table, 2);
  plot.series.push_back({"-U'/B'", "#1f77b4", r, ru});
  plot.series.push_back({"-V'/B'", "#d62728", r, rv});
  // Both curves run off to -infinity at one end; the window follows the
  // bounded part: everything above the larger of the two finite endpoint
  // values, extended down by the range of the curves' upper branch.
  double top = -kInfinity;
  for (double v : ru) top = std::max(top, v);
  for (double v : rv) top = std::max(top, v);
  const double bottom = std::min(ru.empty() ? 0.0 : ru[ru.size() / 2], rv.empty() ? 0.0 : rv[rv.size() / 2]);
  const double span = std::max(top - bottom, 1e-12);
  plot.y_max = top + 0.1 * span;
  plot.y_min = bottom - 1.5 * span;
  return plot;
}

Plot figure_two_plot(const Table& table) {
  Plot plot;
  plot.title = "Critical moduli for radial maps between annuli";
  plot.x_label = "t";
  plot.y_label = "s";
  const auto t = column(table, 0);
  plot.series.push_back({"n(t), harmonic", "#1f77b4", t, column(table, 1)});
  plot.series.push_back({"sigma0(t), bi-harmonic", "#d62728", t, column(table, 2)});
  if (table.columns.size() > 3) plot.series.push_back({"sigma(t)", "#2ca02c", t, column(table, 3)});
  return plot;
}

}  // namespace biharm::reports
