#include "udw/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace udw {

using nlohmann::json;

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw ConfigError("linspace needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int k = 0; k < n; ++k) out[k] = lo + (hi - lo) * k / (n - 1);
  out.back() = hi;
  return out;
}

PositivityMode parse_positivity(std::string_view name) {
  if (name == "clip") return PositivityMode::Clip;
  if (name == "raw") return PositivityMode::Raw;
  throw ConfigError("positivity must be 'clip' or 'raw', got '" + std::string(name) + "'");
}

std::string_view to_string(PositivityMode m) { return m == PositivityMode::Clip ? "clip" : "raw"; }

void SweepConfig::validate() const {
  try {
    detector.validate();
    TrajectoryParams{0.0, L}.validate();
    quadrature.validate();
    nonlocal().validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (initial_state == InitialKind::Custom) throw ConfigError("sweeps need a named initial state");
  if (a_grid.empty()) throw ConfigError("a_grid must be nonempty");
  for (std::size_t k = 0; k < a_grid.size(); ++k) {
    if (!std::isfinite(a_grid[k]) || a_grid[k] < 0.0) throw ConfigError("a_grid entries must be >= 0");
    if (k > 0 && a_grid[k] < a_grid[k - 1]) throw ConfigError("a_grid must be sorted ascending");
  }
  if (scenario == Scenario::Inertial && a_grid.back() > 0.0)
    throw ConfigError("the inertial scenario takes a_grid = [0]");
}

NonlocalOptions SweepConfig::nonlocal() const {
  NonlocalOptions opt;
  opt.starts = nonlocal_starts;
  opt.seed = seed;
  return opt;
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
T get(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("bad value for '" + key + "': " + e.what());
  }
}

}  // namespace

void apply_json(SweepConfig& cfg, const json& j) {
  reject_unknown(j,
                 {"scenario", "initial_state", "omega", "sigma", "lambda", "L", "a_grid", "quadrature",
                  "seed", "positivity", "nonlocal_starts", "outputs"},
                 "config");
  try {
    if (j.contains("scenario")) cfg.scenario = parse_scenario(get<std::string>(j, "scenario"));
    if (j.contains("initial_state")) cfg.initial_state = parse_initial(get<std::string>(j, "initial_state"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (j.contains("omega")) cfg.detector.omega = get<double>(j, "omega");
  if (j.contains("sigma")) cfg.detector.sigma = get<double>(j, "sigma");
  if (j.contains("lambda")) cfg.detector.lambda = get<double>(j, "lambda");
  if (j.contains("L")) cfg.L = get<double>(j, "L");
  if (j.contains("a_grid")) {
    const json& g = j.at("a_grid");
    if (g.is_array()) {
      cfg.a_grid = get<std::vector<double>>(j, "a_grid");
    } else {
      reject_unknown(g, {"min", "max", "points"}, "a_grid");
      cfg.a_grid = linspace(get<double>(g, "min"), get<double>(g, "max"), get<int>(g, "points"));
    }
  }
  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    reject_unknown(q, {"window", "base_panels", "rel_tol", "abs_tol", "eps_schedule", "extrapolation_order"},
                   "quadrature");
    QuadratureConfig& c = cfg.quadrature;
    if (q.contains("window")) c.window = get<double>(q, "window");
    if (q.contains("base_panels")) c.base_panels = get<int>(q, "base_panels");
    if (q.contains("rel_tol")) c.rel_tol = get<double>(q, "rel_tol");
    if (q.contains("abs_tol")) c.abs_tol = get<double>(q, "abs_tol");
    if (q.contains("eps_schedule")) c.eps_schedule = get<std::vector<double>>(q, "eps_schedule");
    if (q.contains("extrapolation_order")) c.extrapolation_order = get<int>(q, "extrapolation_order");
  }
  if (j.contains("seed")) cfg.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("positivity")) cfg.positivity = parse_positivity(get<std::string>(j, "positivity"));
  if (j.contains("nonlocal_starts")) cfg.nonlocal_starts = get<int>(j, "nonlocal_starts");
  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    reject_unknown(o, {"csv", "plot"}, "outputs");
    if (o.contains("csv")) cfg.outputs.csv = get<std::string>(o, "csv");
    if (o.contains("plot")) cfg.outputs.plot = get<std::string>(o, "plot");
  }
}

json to_json(const SweepConfig& cfg) {
  const QuadratureConfig& q = cfg.quadrature;
  return {
      {"scenario", std::string(to_string(cfg.scenario))},
      {"initial_state", std::string(to_string(cfg.initial_state))},
      {"omega", cfg.detector.omega},
      {"sigma", cfg.detector.sigma},
      {"lambda", cfg.detector.lambda},
      {"L", cfg.L},
      {"a_grid", cfg.a_grid},
      {"quadrature",
       {{"window", q.window},
        {"base_panels", q.base_panels},
        {"rel_tol", q.rel_tol},
        {"abs_tol", q.abs_tol},
        {"eps_schedule", q.eps_schedule},
        {"extrapolation_order", q.extrapolation_order}}},
      {"seed", cfg.seed},
      {"positivity", std::string(to_string(cfg.positivity))},
      {"nonlocal_starts", cfg.nonlocal_starts},
      {"outputs", {{"csv", cfg.outputs.csv}, {"plot", cfg.outputs.plot}}},
  };
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  SweepConfig cfg;
  apply_json(cfg, j);
  cfg.validate();
  return cfg;
}

}  // namespace udw
