// udw: entanglement, SRE and CHSH harvesting by accelerated detector pairs.
//
//   udw [options] inertial
//   udw [options] sweep --scenario parallel --initial bell
//   udw [options] table1
//   udw [options] figure fig4a --out-dir figures
//
// Options may follow the subcommand. Exit codes: 0 success, 1 I/O failure,
// 2 configuration error, 3 unconverged quadrature in some row (with --strict).

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "udw/csv.hpp"
#include "udw/plot.hpp"
#include "udw/presets.hpp"
#include "udw/sweep.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitQuadrature = 3;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw udw::ConfigError("cannot parse number '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

struct Overrides {
  std::string config_file, scenario, initial, positivity, a_grid, eps_schedule, csv, plot;
  std::optional<double> omega, sigma, lambda, L, a_min, a_max, window, rel_tol, abs_tol;
  std::optional<int> a_points, base_panels, extrapolation_order, nonlocal_starts;
  std::optional<std::uint64_t> seed;

  udw::SweepConfig build() const {
    udw::SweepConfig c = config_file.empty() ? udw::SweepConfig{} : udw::load_config(config_file);
    try {
      if (!scenario.empty()) c.scenario = udw::parse_scenario(scenario);
      if (!initial.empty()) c.initial_state = udw::parse_initial(initial);
    } catch (const std::invalid_argument& e) {
      throw udw::ConfigError(e.what());
    }
    if (!positivity.empty()) c.positivity = udw::parse_positivity(positivity);
    if (omega) c.detector.omega = *omega;
    if (sigma) c.detector.sigma = *sigma;
    if (lambda) c.detector.lambda = *lambda;
    if (L) c.L = *L;
    if (!a_grid.empty()) c.a_grid = parse_list(a_grid);
    if (a_min || a_max || a_points) {
      if (!a_grid.empty()) throw udw::ConfigError("--a-grid and --a-min/--a-max/--a-points are exclusive");
      c.a_grid = udw::linspace(a_min.value_or(c.a_grid.front()), a_max.value_or(c.a_grid.back()),
                               a_points.value_or(static_cast<int>(c.a_grid.size())));
    }
    if (window) c.quadrature.window = *window;
    if (base_panels) c.quadrature.base_panels = *base_panels;
    if (rel_tol) c.quadrature.rel_tol = *rel_tol;
    if (abs_tol) c.quadrature.abs_tol = *abs_tol;
    if (!eps_schedule.empty()) c.quadrature.eps_schedule = parse_list(eps_schedule);
    if (extrapolation_order) c.quadrature.extrapolation_order = *extrapolation_order;
    if (nonlocal_starts) c.nonlocal_starts = *nonlocal_starts;
    if (seed) c.seed = *seed;
    if (!csv.empty()) c.outputs.csv = csv;
    if (!plot.empty()) c.outputs.plot = plot;
    c.validate();
    return c;
  }
};

void write_table(const udw::Table& t, const std::string& path) {
  if (path.empty() || path == "-") {
    udw::write_csv(t, std::cout);
  } else {
    udw::emit_csv(t, path);
  }
}

int report_convergence(bool all_converged, bool strict) {
  if (all_converged) return 0;
  std::cerr << "warning: quadrature did not reach rel_tol in some rows (status column)\n";
  return strict ? kExitQuadrature : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource harvesting by Unruh-DeWitt detector pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  int workers = 1;
  bool strict = false;
  app.add_option("--config", o.config_file, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--scenario", o.scenario, "inertial | parallel | antiparallel | perpendicular");
  app.add_option("--initial", o.initial, "initial state: 00 | bell | 0T");
  app.add_option("--omega", o.omega, "detector gap Omega");
  app.add_option("--sigma", o.sigma, "Gaussian switching width");
  app.add_option("--lambda", o.lambda, "coupling constant");
  app.add_option("--L", o.L, "initial separation");
  app.add_option("--a-grid", o.a_grid, "comma-separated accelerations");
  app.add_option("--a-min", o.a_min, "first acceleration of an evenly spaced grid");
  app.add_option("--a-max", o.a_max, "last acceleration of an evenly spaced grid");
  app.add_option("--a-points", o.a_points, "number of grid points");
  app.add_option("--window", o.window, "quadrature truncation half-width in units of sigma");
  app.add_option("--base-panels", o.base_panels, "outer quadrature panels");
  app.add_option("--rel-tol", o.rel_tol, "relative quadrature tolerance");
  app.add_option("--abs-tol", o.abs_tol, "absolute quadrature tolerance at unit coupling");
  app.add_option("--eps-schedule", o.eps_schedule, "comma-separated regulator values (units of sigma)");
  app.add_option("--extrapolation-order", o.extrapolation_order, "polynomial order of the eps -> 0 fit");
  app.add_option("--nonlocal-starts", o.nonlocal_starts, "multistart count of the non-local SRE search");
  app.add_option("--positivity", o.positivity, "clip | raw handling of negative eigenvalues");
  app.add_option("--seed", o.seed, "optimizer seed");
  app.add_option("--csv", o.csv, "CSV output path ('-' for stdout)");
  app.add_option("--plot", o.plot, "SVG output path");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--strict", strict, "exit with status 3 when a row's quadrature did not converge");

  CLI::App* inertial = app.add_subcommand("inertial", "inertial |00> study over Omega sigma");
  CLI::App* sweep = app.add_subcommand("sweep", "resources versus acceleration");
  CLI::App* table1 = app.add_subcommand("table1", "resources of the uncoupled initial states");
  CLI::App* figure = app.add_subcommand("figure", "reproduce a named figure");
  std::string preset_name, out_dir = "figures";
  figure->add_option("preset", preset_name, "preset name")->required();
  figure->add_option("--out-dir", out_dir, "directory for CSV and SVG files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const udw::SweepConfig cfg = o.build();
    if (*inertial) {
      const udw::InertialStudy s = udw::run_inertial_study(cfg, workers);
      write_table(udw::to_table(s), cfg.outputs.csv);
      if (!cfg.outputs.plot.empty()) udw::write_svg(udw::inertial_plot("inertial |00>", s), cfg.outputs.plot);
      bool ok = true;
      for (const auto& r : s.rows) ok = ok && r.converged;
      return report_convergence(ok, strict);
    }
    if (*sweep) {
      const udw::SweepResult r = udw::run_sweep(cfg, workers);
      write_table(udw::to_table(r), cfg.outputs.csv);
      if (!cfg.outputs.plot.empty()) udw::emit_plot(r, cfg.outputs.plot);
      return report_convergence(r.all_converged(), strict);
    }
    if (*table1) {
      write_table(udw::to_table(udw::run_table1(cfg.nonlocal())), cfg.outputs.csv);
      return 0;
    }
    if (*figure) {
      const udw::Preset p = udw::make_preset(preset_name, cfg);
      const udw::PresetOutput out = udw::run_preset(p, workers, out_dir);
      for (const auto& f : out.files) std::cout << f.string() << "\n";
      bool ok = true;
      for (const auto& r : out.sweeps) ok = ok && r.all_converged();
      if (out.inertial)
        for (const auto& r : out.inertial->rows) ok = ok && r.converged;
      return report_convergence(ok, strict);
    }
  } catch (const udw::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const udw::OutputError& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
