#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "udw/config.hpp"
#include "udw/sweep.hpp"

namespace udw {

struct PresetRun {
  std::string label;  // file-name safe, e.g. "omega1"
  SweepConfig config;
};

// A named figure. Presets fix scenario, initial state, omega, sigma and L;
// everything else (lambda, a_grid, quadrature, seed, positivity, optimizer
// starts) comes from the base configuration.
//
//   fig2          inertial |00>, Omega*sigma in [0.25, 3], L in {0.5, 1, 2}
//   fig3a         parallel |00>, sigma = 1, L = 1, Omega in {1, 2, 3}
//   fig3b         parallel |00>, Omega = 2, sigma = 1, L in {1, 2, 5}
//   fig4a/b/c     parallel, Omega = 2, sigma = 1, L = 0.5; |00>, |Phi+>, |0>|T>
//   fig5a         parallel |Phi+>, sigma = 1, L = 1, Omega in {1, 2, 3}
//   fig5b         parallel |Phi+>, Omega = 2, sigma = 1, L in {1, 2, 5}
//   fig6a/b/c     antiparallel, as fig4
//   fig7a/b/c     perpendicular, as fig4
struct Preset {
  std::string name;
  std::string title;
  bool inertial = false;
  SweepConfig base;             // used by the inertial preset
  std::vector<PresetRun> runs;  // empty for the inertial preset
};

const std::vector<std::string>& preset_names();

// Throws ConfigError for an unknown name.
Preset make_preset(const std::string& name, const SweepConfig& base);

struct PresetOutput {
  std::vector<SweepResult> sweeps;  // parallel to Preset::runs
  std::optional<InertialStudy> inertial;
  std::vector<std::filesystem::path> files;
};

// Writes <outdir>/<name>[_<label>].csv per run and <outdir>/<name>.svg.
PresetOutput run_preset(const Preset& preset, int workers, const std::filesystem::path& outdir);

}  // namespace udw
