#pragma once

#include <string>
#include <vector>

#include "udw/config.hpp"
#include "udw/resources.hpp"

namespace udw {

struct ResourceReport {
  double concurrence = 0.0;
  double M2 = 0.0;
  double S2 = 0.0;
  double M2_tilde = 0.0;
  double M2_NL = 0.0;        // min over local unitaries of M2
  double M2_tilde_NL = 0.0;  // M2_NL - S2
  double bell_b0 = 0.0;
  double pauli_bell_max = 0.0;
  double purity = 1.0;
  LocalUnitary nl_minimizer;
  bool nl_converged = false;
};

ResourceReport resource_report(const DensityMatrix& rho, const NonlocalOptions& opt);

// Resource values of an uncoupled initial state: (M2~, C, b0, M2_NL).
struct InitialValues {
  double M2_tilde = 0.0;
  double concurrence = 0.0;
  double bell_b0 = 0.0;
  double M2_NL = 0.0;
};

// Stored reference values for the three named initial states.
InitialValues table1_reference(InitialKind kind);

struct Table1Row {
  InitialKind state = InitialKind::ZeroZero;
  InitialValues computed;
  InitialValues reference;
};

std::vector<Table1Row> run_table1(const NonlocalOptions& opt = {});

struct SweepRow {
  double a = 0.0;
  double PA = 0.0;
  double PB = 0.0;
  double absM = 0.0;
  double concurrence = 0.0;
  double dC = 0.0;
  double M2_tilde = 0.0;
  double dM2_tilde = 0.0;
  double M2_NL = 0.0;  // M2~ convention: min of M2 minus S2
  double dM2_NL = 0.0;
  double bell_b0 = 0.0;
  double dB0 = 0.0;
  double purity = 1.0;
  double quadrature_error_estimate = 0.0;

  double M2_NL_raw = 0.0;  // min of M2 without the S2 subtraction
  double pauli_bell_max = 0.0;
  double min_eigenvalue = 0.0;  // before any clipping
  double clipped_weight = 0.0;
  bool converged = true;
  std::string status = "ok";  // ok | unconverged | quadrature_failure | error: ...
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;

  bool all_converged() const;
};

// One row per a_grid entry, computed on `workers` threads; row order follows a_grid.
SweepResult run_sweep(const SweepConfig& cfg, int workers = 1);

// Same correlators, several initial states: results[k] belongs to states[k].
std::vector<SweepResult> run_sweep_states(const SweepConfig& cfg, const std::vector<InitialKind>& states,
                                          int workers = 1);

struct InertialRow {
  double omega_sigma = 0.0;
  double L = 0.0;
  double PA = 0.0;
  double PA_closed = 0.0;
  double absM = 0.0;
  double absM_closed = 0.0;
  double concurrence = 0.0;
  double concurrence_closed = 0.0;  // perturbative formula on the closed forms
  double M2_tilde = 0.0;        // exact M2~ of the evolved second-order state
  double M2_tilde_pert = 0.0;   // second-order SRE formula on the quadrature PA, PB
  double M2_tilde_closed = 0.0;  // second-order SRE formula on the closed forms
  double quadrature_error_estimate = 0.0;
  bool converged = true;
  std::string status = "ok";
};

struct InertialStudy {
  SweepConfig config;
  std::vector<double> omega_sigma;
  std::vector<double> separations;
  std::vector<InertialRow> rows;  // separation-major
};

// Inertial |00> study at fixed sigma and lambda: Omega = x / sigma for x in omega_sigma,
// repeated for each separation.
InertialStudy run_inertial_study(const SweepConfig& cfg, int workers = 1,
                                 std::vector<double> omega_sigma = linspace(0.25, 3.0, 12),
                                 std::vector<double> separations = {0.5, 1.0, 2.0});

}  // namespace udw
