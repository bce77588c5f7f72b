#include "biharm/cli.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"

#include "biharm/basis_kernel.hpp"
#include "biharm/errors.hpp"
#include "biharm/nitsche_bounds.hpp"
#include "biharm/radial_maps.hpp"
#include "biharm/reports.hpp"
#include "biharm/verification.hpp"

namespace biharm::cli {

namespace {

using reports::Json;
using reports::number;

constexpr double kResidualLimit = 1e-5;
constexpr double kLaplacianStep = 1e-3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double t = std::numeric_limits<double>::quiet_NaN();
  double s = std::numeric_limits<double>::quiet_NaN();
  double x = 0.0;
  double y = 0.0;
  double r = std::numeric_limits<double>::quiet_NaN();
  double tol = 1e-8;
  std::string t_grid;
  std::size_t samples = 1000;
  std::string format;
  std::string out_path;
  bool with_sigma = false;
  std::string suite = "all";
  int figure = 1;
  std::string t_range = "1,3";
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t grid = 32;
};

struct Payload {
  int code = kSuccess;
  std::string body;
};

std::vector<double> parse_list(const std::string& text, std::string_view flag) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item(text.data() + pos, comma - pos);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw UsageError("malformed number '" + std::string(item) + "' in " + std::string(flag));
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) flatten(value, prefix + "[" + std::to_string(i++) + "]", out);
  } else if (j.is_number_float()) {
    out += prefix + " = " + reports::format_number(j.get<double>()) + "\n";
  } else if (j.is_string()) {
    out += prefix + " = " + j.get<std::string>() + "\n";
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::string out;
  flatten(j, "", out);
  return out;
}

Json basis_command(const Options& o) {
  const Modulus t(o.t);
  const CardinalBasis basis(t);
  Json j = reports::envelope("basis", Json{{"t", number(o.t)}, {"r", number(o.r)}});
  const BasisEval e = basis.derivatives(o.r);
  const RatioEval q = basis.ratios(o.r);
  j["basis"] = reports::to_json(e);
  j["ratios"] = Json{{"ra", number(q.ra)}, {"ru", number(q.ru)}, {"rv", number(q.rv)}, {"at_limit", q.at_limit}};
  return j;
}

BoundarySpec boundary(const Options& o) {
  BoundarySpec spec{o.t, o.s, o.x, o.y};
  spec.validate();
  return spec;
}

Json boundary_inputs(const Options& o) {
  return Json{{"t", number(o.t)}, {"s", number(o.s)}, {"x", number(o.x)}, {"y", number(o.y)}};
}

Json map_solve_command(const Options& o) {
  const BoundarySpec spec = boundary(o);
  SolveDiagnostics diag;
  const RadialCoefficients k = solve_coefficients(spec, &diag);
  Json j = reports::envelope("map-solve", boundary_inputs(o));
  j["coefficients"] = reports::to_json(k);
  j["condition"] = number(diag.condition);
  j["ill_conditioned"] = diag.ill_conditioned;
  j["monotonicity"] = reports::to_json(monotonicity_report(k, spec.t));
  return j;
}

Json map_eval_command(const Options& o) {
  const BoundarySpec spec = boundary(o);
  if (!(o.r >= 1.0 && o.r <= spec.t)) throw DomainError("map-eval needs 1 <= r <= t");
  const RadialCoefficients k = solve_coefficients(spec);
  Json inputs = boundary_inputs(o);
  inputs["r"] = number(o.r);
  Json j = reports::envelope("map-eval", std::move(inputs));
  j["coefficients"] = reports::to_json(k);
  j["g"] = number(eval_g(k, o.r));
  j["g_prime"] = number(eval_g_prime(k, o.r));
  j["g_second"] = number(eval_g_second(k, o.r));
  return j;
}

Json nitsche_command(const Options& o) {
  Json j = reports::envelope("nitsche", Json{{"t", number(o.t)}});
  j["t"] = number(o.t);
  j["nitsche"] = number(nitsche_bound(o.t));
  return j;
}

Json sigma0_command(const Options& o) {
  const Modulus t(o.t);
  Json j = reports::envelope("sigma0", Json{{"t", number(o.t)}});
  j["t"] = number(o.t);
  j["sigma0"] = number(sigma0(t));
  j["nitsche"] = number(nitsche_bound(o.t));
  return j;
}

Payload sigma_command(const Options& o) {
  const Modulus t(o.t);
  if (!(o.tol >= kMinSolverTol)) throw DomainError("--tol must be at least 1e-10");
  const SigmaEstimate est = certified_sigma(t, o.tol);
  Json j = reports::envelope("sigma", Json{{"t", number(o.t)}, {"tol", number(o.tol)}});
  j["sigma"] = number(est.minimax.sigma);
  j["sigma_bisection"] = number(est.bisection);
  j["uncertainty"] = number(est.uncertainty);
  j["sigma0"] = number(sigma0(t));
  j["minimax"] = reports::to_json(est.minimax);
  const int code = est.minimax.status == MinimaxStatus::max_iter ? kNonConvergence : kSuccess;
  return {code, render(j, o.format)};
}

Json feasible_command(const Options& o) {
  const Modulus t(o.t);
  if (!(o.s > 1.0) || !std::isfinite(o.s)) throw DomainError("--s must be a finite value above 1");
  Json j = reports::envelope("feasible", Json{{"t", number(o.t)}, {"s", number(o.s)}});
  j["result"] = reports::to_json(feasible(t, o.s));
  return j;
}

Payload critical_command(const Options& o) {
  const Modulus t(o.t);
  if (!(o.tol >= kMinSolverTol)) throw DomainError("--tol must be at least 1e-10");
  const CriticalMap m = critical_map(t, o.tol);
  Json j = reports::envelope("critical", Json{{"t", number(o.t)}, {"tol", number(o.tol)}});
  j["coefficients"] = reports::to_json(m.coeffs);
  j["solution"] = reports::to_json(m.solution);
  j["g_prime_at_1"] = number(eval_g_prime(m.coeffs, 1.0));
  j["g_prime_at_t"] = number(eval_g_prime(m.coeffs, o.t));
  j["monotonicity"] = reports::to_json(monotonicity_report(m.coeffs, o.t));
  j["homogeneous"] = reports::to_json(critical_homogeneous_map(t));
  const int code = m.solution.status == MinimaxStatus::max_iter ? kNonConvergence : kSuccess;
  return {code, render(j, o.format)};
}

Payload verify_command(const Options& o) {
  const std::vector<double> grid = o.t_grid.empty() ? verification::default_t_grid() : parse_list(o.t_grid, "--t-grid");
  for (double t : grid) (void)Modulus(t);
  if (o.samples < 2) throw DomainError("--samples must be at least 2");
  const verification::SuiteResult result = verification::run_suite(o.suite, grid, o.samples);
  Json grid_json = Json::array();
  for (double t : grid) grid_json.push_back(number(t));
  Json j = reports::envelope("verify", Json{{"suite", o.suite}, {"t_grid", grid_json}, {"samples", o.samples}});
  j.update(reports::to_json(result));
  return {result.passed ? kSuccess : kNonConvergence, render(j, o.format)};
}

Payload figure_command(const Options& o) {
  if (o.format == "svg" || o.format == "csv") {
  } else {
    throw UsageError("figure supports --format csv or svg");
  }
  reports::Table table;
  reports::Plot plot;
  if (o.figure == 1) {
    const double t = std::isnan(o.t) ? 1.5 : o.t;
    table = reports::figure_one_table({t, o.samples});
    if (o.format == "svg") plot = reports::figure_one_plot(table, t);
  } else {
    const std::vector<double> range = parse_list(o.t_range, "--t-range");
    if (range.size() != 2) throw UsageError("--t-range takes two values lo,hi");
    if (o.with_sigma && !(o.tol >= kMinSolverTol)) throw DomainError("--tol must be at least 1e-10");
    table = reports::figure_two_table({range[0], range[1], o.samples, o.with_sigma, o.tol});
    if (o.format == "svg") plot = reports::figure_two_plot(table);
  }
  return {kSuccess, o.format == "svg" ? reports::to_svg(plot) : reports::to_csv(table)};
}

Payload check_biharmonic_command(const Options& o) {
  if (o.count < 1) throw DomainError("--count must be at least 1");
  if (o.grid < 16) throw DomainError("--grid must be at least 16");
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> coeff(-10.0, 10.0);
  std::uniform_real_distribution<double> radius(1.2, 4.8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<RadialCoefficients> draws(o.count);
  std::vector<std::complex<double>> points(o.count);
  for (std::size_t i = 0; i < o.count; ++i) {
    draws[i] = {coeff(rng), coeff(rng), coeff(rng), coeff(rng), 0.0};
    const double r = radius(rng);
    points[i] = std::polar(r, angle(rng));
  }
  const auto residuals = kernels::tabulate(o.count, [&](std::size_t i) { return biharmonic_residual(draws[i], o.grid); });
  const auto laplacian_errors = kernels::tabulate(o.count, [&](std::size_t i) {
    const LaplacianCoefficients lc = laplacian_coefficients(draws[i]);
    const std::complex<double> z = points[i];
    const std::complex<double> exact = lc.alpha * z + lc.beta / std::conj(z);
    return std::abs(finite_difference_laplacian(draws[i], z, kLaplacianStep) - exact);
  });
  const kernels::Extremum worst_residual = kernels::omp::argmax(residuals);
  const kernels::Extremum worst_laplacian = kernels::omp::argmax(laplacian_errors);
  const bool passed = worst_residual.value < kResidualLimit && worst_laplacian.value < kResidualLimit;

  Json j = reports::envelope("check-biharmonic",
                             Json{{"count", o.count}, {"seed", o.seed}, {"grid", o.grid}});
  j["passed"] = passed;
  j["limit"] = number(kResidualLimit);
  j["max_biharmonic_residual"] = number(worst_residual.value);
  j["worst_coefficients"] = reports::to_json(draws[worst_residual.index]);
  j["max_laplacian_error"] = number(worst_laplacian.value);
  j["worst_laplacian_coefficients"] = reports::to_json(draws[worst_laplacian.index]);
  return {passed ? kSuccess : kNonConvergence, render(j, o.format)};
}

void emit(const Payload& p, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << p.body;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open output file " + o.out_path);
  file << p.body;
  if (!file) throw DomainError("cannot write output file " + o.out_path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial bi-harmonic maps between annuli: critical moduli and verification", "biharm"};
  app.set_version_flag("--version", std::string(BIHARM_VERSION));
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> text_json{"text", "json"};
  const auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& allowed, const std::string& def) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed))->default_str(def);
    cmd->add_option("--out", o.out_path, "Write the payload to this file instead of standard output");
  };
  const auto add_t = [&](CLI::App* cmd) { cmd->add_option("--t", o.t, "Outer radius of the domain annulus")->required(); };
  const auto add_map = [&](CLI::App* cmd) {
    add_t(cmd);
    cmd->add_option("--s", o.s, "Outer radius of the image annulus")->required();
    cmd->add_option("--x", o.x, "Boundary speed g'(1)")->capture_default_str();
    cmd->add_option("--y", o.y, "Boundary speed g'(t)")->capture_default_str();
  };
  const auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.tol, "Solver tolerance")->capture_default_str();
  };

  std::map<CLI::App*, std::function<Payload()>> actions;
  const auto simple = [&](std::function<Json()> f) { return [&o, f] { return Payload{kSuccess, render(f(), o.format)}; }; };

  auto* basis = app.add_subcommand("basis", "Cardinal basis values, derivatives and ratios at r");
  add_t(basis);
  basis->add_option("--r", o.r, "Radius in [1, t]")->required();
  add_format(basis, text_json, "text");
  actions[basis] = simple([&] { return basis_command(o); });

  auto* solve = app.add_subcommand("map-solve", "Coefficients of the radial map with given boundary data");
  add_map(solve);
  add_format(solve, text_json, "text");
  actions[solve] = simple([&] { return map_solve_command(o); });

  auto* eval = app.add_subcommand("map-eval", "Profile g and its derivatives at r");
  add_map(eval);
  eval->add_option("--r", o.r, "Radius in [1, t]")->required();
  add_format(eval, text_json, "text");
  actions[eval] = simple([&] { return map_eval_command(o); });

  auto* nitsche = app.add_subcommand("nitsche", "Harmonic critical modulus n(t)");
  add_t(nitsche);
  add_format(nitsche, text_json, "text");
  actions[nitsche] = simple([&] { return nitsche_command(o); });

  auto* s0 = app.add_subcommand("sigma0", "Bi-harmonic critical modulus with zero boundary speeds");
  add_t(s0);
  add_format(s0, text_json, "text");
  actions[s0] = simple([&] { return sigma0_command(o); });

  auto* sigma = app.add_subcommand("sigma", "Bi-harmonic critical modulus with free boundary speeds");
  add_t(sigma);
  add_tol(sigma);
  add_format(sigma, text_json, "text");
  actions[sigma] = [&] { return sigma_command(o); };

  auto* feas = app.add_subcommand("feasible", "Whether A(1, t) maps onto A(1, s) by a nondecreasing profile");
  add_t(feas);
  feas->add_option("--s", o.s, "Outer radius of the image annulus")->required();
  add_format(feas, text_json, "text");
  actions[feas] = simple([&] { return feasible_command(o); });

  auto* crit = app.add_subcommand("critical", "The extremal map attaining sigma(t)");
  add_t(crit);
  add_tol(crit);
  add_format(crit, text_json, "text");
  actions[crit] = [&] { return critical_command(o); };

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  const auto suites = verification::suite_names();
  verify->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember(std::vector<std::string>(suites.begin(), suites.end())))
      ->capture_default_str();
  verify->add_option("--t-grid", o.t_grid, "Comma separated moduli");
  verify->add_option("--samples", o.samples, "Radii per modulus")->capture_default_str();
  add_format(verify, text_json, "text");
  actions[verify] = [&] { return verify_command(o); };

  auto* figure = app.add_subcommand("figure", "Figure data as CSV or SVG");
  figure->add_option("which", o.figure, "Figure number")->required()->check(CLI::IsMember({1, 2}));
  figure->add_option("--t", o.t, "Modulus for figure 1 (default 1.5)");
  figure->add_option("--samples", o.samples, "Number of samples")->capture_default_str();
  figure->add_option("--t-range", o.t_range, "Range lo,hi of t for figure 2, lo excluded")->capture_default_str();
  figure->add_flag("--with-sigma", o.with_sigma, "Add a sigma(t) column to figure 2");
  add_tol(figure);
  add_format(figure, {"csv", "svg"}, "csv");
  actions[figure] = [&] { return figure_command(o); };

  auto* bih = app.add_subcommand("check-biharmonic", "Finite-difference bi-harmonicity check on random profiles");
  bih->add_option("--count", o.count, "Number of random coefficient quadruples")->capture_default_str();
  bih->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  bih->add_option("--grid", o.grid, "Radii per profile")->capture_default_str();
  add_format(bih, text_json, "text");
  actions[bih] = [&] { return check_biharmonic_command(o); };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  for (const auto& [cmd, action] : actions) {
    if (!cmd->parsed()) continue;
    if (o.format.empty()) o.format = cmd == figure ? "csv" : "text";
    try {
      const Payload p = action();
      emit(p, o, out);
      return p.code;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsageError;
    } catch (const std::invalid_argument& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsageError;
    } catch (const DomainError& e) {
      err << "domain error: " << e.what() << "\n";
      return kDomainError;
    } catch (const SingularSystemError& e) {
      err << "numerical failure: " << e.what() << "\n";
      return kNonConvergence;
    }
  }
  err << "usage error: no command\n";
  return kUsageError;
}

}  // namespace biharm::cli
