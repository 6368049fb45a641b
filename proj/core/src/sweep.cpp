#include "udw/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

namespace udw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs fn(0..n-1) on up to `workers` threads. fn must not throw.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  const std::size_t threads = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) fn(k);
    });
}

SweepRow failed_row(double a, std::string status) {
  SweepRow row;
  row.a = a;
  row.PA = row.PB = row.absM = kNaN;
  row.concurrence = row.dC = row.M2_tilde = row.dM2_tilde = kNaN;
  row.M2_NL = row.dM2_NL = row.bell_b0 = row.dB0 = row.purity = kNaN;
  row.quadrature_error_estimate = kNaN;
  row.M2_NL_raw = row.pauli_bell_max = row.min_eigenvalue = row.clipped_weight = kNaN;
  row.converged = false;
  row.status = std::move(status);
  return row;
}

void fill_resources(SweepRow& row, const DensityMatrix& raw, const SweepConfig& cfg, InitialKind kind) {
  row.min_eigenvalue = raw.min_eigenvalue();
  const DensityMatrix rho =
      cfg.positivity == PositivityMode::Clip && raw.min_eigenvalue() < 0.0 ? raw.clip() : raw;
  row.clipped_weight = rho.clipped_weight();
  const ResourceReport rep = resource_report(rho, cfg.nonlocal());
  const InitialValues init = table1_reference(kind);
  row.concurrence = rep.concurrence;
  row.dC = rep.concurrence - init.concurrence;
  row.M2_tilde = rep.M2_tilde;
  row.dM2_tilde = rep.M2_tilde - init.M2_tilde;
  row.M2_NL = rep.M2_tilde_NL;
  row.dM2_NL = rep.M2_tilde_NL - init.M2_NL;
  row.M2_NL_raw = rep.M2_NL;
  row.bell_b0 = rep.bell_b0;
  row.dB0 = rep.bell_b0 - init.bell_b0;
  row.pauli_bell_max = rep.pauli_bell_max;
  row.purity = rep.purity;
}

}  // namespace

ResourceReport resource_report(const DensityMatrix& rho, const NonlocalOptions& opt) {
  ResourceReport rep;
  rep.concurrence = concurrence(rho);
  const Sre2 s = sre2(rho);
  rep.M2 = s.M2;
  rep.S2 = s.S2;
  rep.M2_tilde = s.M2_tilde;
  const NonlocalSre nl = nonlocal_sre(rho, opt);
  rep.M2_NL = nl.M2_NL;
  rep.M2_tilde_NL = nl.M2_tilde_NL;
  rep.nl_minimizer = nl.minimizer;
  rep.nl_converged = nl.converged;
  rep.bell_b0 = bell_expectation(rho);
  rep.pauli_bell_max = pauli_bell_max(rho);
  rep.purity = purity(rho);
  return rep;
}

InitialValues table1_reference(InitialKind kind) {
  switch (kind) {
    case InitialKind::ZeroZero: return {0.0, 0.0, 1.0, 0.0};
    case InitialKind::BellPhiPlus: return {0.0, 1.0, 2.0, 0.0};
    case InitialKind::ZeroT: return {std::log2(4.0 / 3.0), 0.0, -std::sqrt(0.5), 0.0};
    case InitialKind::Custom: break;
  }
  throw std::invalid_argument("no reference values for a custom initial state");
}

std::vector<Table1Row> run_table1(const NonlocalOptions& opt) {
  std::vector<Table1Row> out;
  for (InitialKind k : {InitialKind::ZeroZero, InitialKind::BellPhiPlus, InitialKind::ZeroT}) {
    const ResourceReport rep = resource_report(InitialState{k, {}}.density(), opt);
    out.push_back({k, {rep.M2_tilde, rep.concurrence, rep.bell_b0, rep.M2_NL}, table1_reference(k)});
  }
  return out;
}

bool SweepResult::all_converged() const {
  for (const SweepRow& r : rows)
    if (!r.converged) return false;
  return true;
}

std::vector<SweepResult> run_sweep_states(const SweepConfig& cfg, const std::vector<InitialKind>& states,
                                          int workers) {
  cfg.validate();
  std::vector<SweepResult> out(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    out[s].config = cfg;
    out[s].config.initial_state = states[s];
    out[s].config.validate();
    out[s].rows.resize(cfg.a_grid.size());
  }
  parallel_for(cfg.a_grid.size(), workers, [&](std::size_t k) {
    const double a = cfg.a_grid[k];
    CorrelatorSet corr;
    try {
      corr = correlator_set(cfg.scenario, {a, cfg.L}, cfg.detector, cfg.quadrature);
    } catch (const QuadratureError& e) {
      for (auto& res : out) res.rows[k] = failed_row(a, "quadrature_failure");
      return;
    } catch (const std::exception& e) {
      for (auto& res : out) res.rows[k] = failed_row(a, std::string("error: ") + e.what());
      return;
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
      SweepRow& row = out[s].rows[k];
      try {
        row.a = a;
        row.PA = corr.PA();
        row.PB = corr.PB();
        row.absM = std::abs(corr.M());
        row.quadrature_error_estimate = corr.error_estimate;
        row.converged = corr.converged;
        row.status = corr.converged ? "ok" : "unconverged";
        fill_resources(row, final_state(InitialState{states[s], {}}, corr, PositivityMode::Raw), cfg,
                       states[s]);
      } catch (const std::exception& e) {
        row = failed_row(a, std::string("error: ") + e.what());
      }
    }
  });
  return out;
}

SweepResult run_sweep(const SweepConfig& cfg, int workers) {
  return std::move(run_sweep_states(cfg, {cfg.initial_state}, workers).front());
}

InertialStudy run_inertial_study(const SweepConfig& cfg, int workers, std::vector<double> omega_sigma,
                                 std::vector<double> separations) {
  SweepConfig base = cfg;
  base.scenario = Scenario::Inertial;
  base.initial_state = InitialKind::ZeroZero;
  base.a_grid = {0.0};
  base.validate();
  if (omega_sigma.empty() || separations.empty()) throw ConfigError("inertial study needs nonempty grids");
  for (double x : omega_sigma)
    if (!(x > 0.0)) throw ConfigError("omega*sigma grid entries must be > 0");
  for (double L : separations)
    if (!(L > 0.0)) throw ConfigError("separations must be > 0");

  InertialStudy study;
  study.config = base;
  study.omega_sigma = std::move(omega_sigma);
  study.separations = std::move(separations);
  const std::size_t nx = study.omega_sigma.size();
  study.rows.resize(nx * study.separations.size());
  parallel_for(study.rows.size(), workers, [&](std::size_t k) {
    InertialRow& row = study.rows[k];
    row.L = study.separations[k / nx];
    row.omega_sigma = study.omega_sigma[k % nx];
    DetectorParams d = base.detector;
    d.omega = row.omega_sigma / d.sigma;
    try {
      const InertialClosedForms cf = inertial_closed_forms(d, row.L);
      row.PA_closed = cf.E2;
      row.absM_closed = std::abs(cf.M);
      row.concurrence_closed = std::max(0.0, 2.0 * (row.absM_closed - cf.E2));
      row.M2_tilde_closed = -std::log2(1.0 - 8.0 * cf.E2) + std::log2(1.0 - 4.0 * cf.E2);

      const CorrelatorSet corr = correlator_set(Scenario::Inertial, {0.0, row.L}, d, base.quadrature);
      row.PA = corr.PA();
      row.absM = std::abs(corr.M());
      row.quadrature_error_estimate = corr.error_estimate;
      row.converged = corr.converged;
      row.status = corr.converged ? "ok" : "unconverged";
      const DensityMatrix rho = final_state_00(corr);
      row.concurrence = concurrence(rho);
      row.M2_tilde = sre2(rho).M2_tilde;
      row.M2_tilde_pert = sre2_perturbative(corr);
    } catch (const std::exception& e) {
      row.PA = row.absM = row.concurrence = row.M2_tilde = row.M2_tilde_pert = kNaN;
      row.quadrature_error_estimate = kNaN;
      row.converged = false;
      row.status = std::string("error: ") + e.what();
    }
  });
  return study;
}

}  // namespace udw
