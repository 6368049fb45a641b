#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "udw/correlators.hpp"
#include "udw/dynamics.hpp"
#include "udw/geometry.hpp"
#include "udw/nonlocal_sre.hpp"

namespace udw {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputPaths {
  std::string csv;   // empty: no CSV written
  std::string plot;  // empty: no SVG written
};

// n equally spaced points on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, int n);

struct SweepConfig {
  Scenario scenario = Scenario::Parallel;
  InitialKind initial_state = InitialKind::ZeroZero;
  DetectorParams detector{2.0, 0.1, 1.0};  // omega, lambda, sigma
  double L = 0.5;
  std::vector<double> a_grid = linspace(0.0, 4.0, 40);
  QuadratureConfig quadrature;
  std::uint64_t seed = 0;
  PositivityMode positivity = PositivityMode::Clip;
  int nonlocal_starts = 32;
  OutputPaths outputs;

  // Throws ConfigError.
  void validate() const;
  NonlocalOptions nonlocal() const;
};

// Schema (every key optional, unknown keys rejected):
//   scenario        "inertial" | "parallel" | "antiparallel" | "perpendicular"
//   initial_state   "00" | "bell" | "0T"
//   omega, sigma, lambda, L     numbers
//   a_grid          [numbers] or {"min": x, "max": y, "points": n}
//   quadrature      {"window", "base_panels", "rel_tol", "abs_tol",
//                    "eps_schedule": [..], "extrapolation_order"}
//   seed            unsigned integer
//   positivity      "clip" | "raw"
//   nonlocal_starts integer
//   outputs         {"csv": path, "plot": path}
void apply_json(SweepConfig& cfg, const nlohmann::json& j);
nlohmann::json to_json(const SweepConfig& cfg);

SweepConfig load_config(const std::filesystem::path& path);

PositivityMode parse_positivity(std::string_view name);
std::string_view to_string(PositivityMode m);

}  // namespace udw
