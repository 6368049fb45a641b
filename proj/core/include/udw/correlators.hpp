#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "udw/geometry.hpp"

namespace udw {

using cd = std::complex<double>;

struct DetectorParams {
  double omega = 2.0;   // energy gap
  double lambda = 0.1;  // coupling
  double sigma = 1.0;   // Gaussian switching width

  void validate() const;
};

struct QuadratureConfig {
  double window = 6.0;  // truncation half-width, units of sigma
  int base_panels = 8;  // outer panels at the coarsest level
  double rel_tol = 1e-4;
  double abs_tol = 1e-14;  // at unit coupling
  std::vector<double> eps_schedule{0.1, 0.05, 0.025, 0.0125};  // units of sigma
  int extrapolation_order = 3;

  void validate() const;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

// Sign of the phase factor e^{+-i Omega tau}.
enum class Sign { Plus, Minus };

// Regulated massless Wightman function
//   W(p, q) = -1/(4 pi^2) / ((dt - i eps)^2 - |dx|^2),   dt = p.t - q.t.
cd wightman(const SpacetimePoint& p, const SpacetimePoint& q, double eps);

// Same kernel written in terms of the coordinate-time difference and interval
// dt^2 - |dx|^2. The time-ordered (Feynman) kernel is wightman_from(|dt|, ...).
cd wightman_from(double dt, double interval, double eps);

// Inertial distributional form W = sgn(dt) delta(f) / (4 pi i) - 1 / (4 pi^2 f),
// f = dt^2 - L^2. Throws on the light cone f = 0.
struct DistributionalWightman {
  double delta_coefficient = 0.0;  // multiplies delta(f); the i/(4 pi) factor is implied
  double pv_part = 0.0;
};
DistributionalWightman wightman_inertial_distributional(double dt, double L);

struct CorrelatorValue {
  cd value;
  double error_estimate = 0.0;  // relative
  bool converged = true;
};

// <E_i^alpha|E_j^beta> = lambda^2 int int g(tau) g(tau') e^{i Omega (alpha tau + beta tau')}
//                       W(x_i(tau), x_j(tau')),   g(tau) = exp(-tau^2 / 2 sigma^2),
// with the worldlines continued to tau - i eps/2 and tau' + i eps/2, evaluated for
// each eps of qcfg.eps_schedule (units of sigma) and extrapolated to eps = 0.
CorrelatorValue correlator(Detector i, Sign alpha, Detector j, Sign beta, Scenario scenario,
                           const TrajectoryParams& tparams, const DetectorParams& dparams,
                           const QuadratureConfig& qcfg);

// Index of the field vectors Phi_i^alpha |0> in the Gram matrix.
enum FieldMode : int { kAPlus = 0, kAMinus = 1, kBPlus = 2, kBMinus = 3 };

// All second-order field inner products for one parameter point.
//
// gram(k, l) = <v_k|v_l> with v_{i,alpha} = lambda int g e^{i alpha Omega tau} phi(x_i) |0>,
// so gram(k, l) = <E_i^{-alpha}|E_j^{beta}> in the exponent-sign notation above.
// pair(alpha, beta) = lambda^2 int int g g e^{i Omega (alpha tau_A + beta tau_B)} W_F,
// the time-ordered two-detector amplitude.
struct CorrelatorSet {
  Eigen::Matrix4cd gram = Eigen::Matrix4cd::Zero();
  Eigen::Matrix2cd pair = Eigen::Matrix2cd::Zero();  // index 0 = '+', 1 = '-'
  double error_estimate = 0.0;
  bool converged = true;

  // excitation probabilities |E_i|^2 = <E_i^-|E_i^+>
  double PA() const { return gram(kAPlus, kAPlus).real(); }
  double PB() const { return gram(kBPlus, kBPlus).real(); }
  // de-excitation probabilities <E_i^+|E_i^->
  double QA() const { return gram(kAMinus, kAMinus).real(); }
  double QB() const { return gram(kBMinus, kBMinus).real(); }
  // <00|rho|11> for the |00> state: pair creation by virtual exchange
  cd M() const { return -std::conj(pair(0, 0)); }
  // pair annihilation amplitude; equals M for inertial detectors
  cd N() const { return -std::conj(pair(1, 1)); }
  // exchange amplitudes |10> <-> |01>
  cd K() const { return -std::conj(pair(0, 1)); }
  cd Kbar() const { return -std::conj(pair(1, 0)); }
  // <E_A^-|E_B^+> and <E_A^-|E_B^->
  cd XAB() const { return gram(kAPlus, kBPlus); }
  cd YAB() const { return gram(kAPlus, kBMinus); }
  // M' = (<E_A^-|E_B^-> + <E_B^+|E_A^+>)/2 and M'' = (<E_A^+|E_B^+> + <E_B^-|E_A^->)/2
  double Mp() const { return gram(kAPlus, kBMinus).real(); }
  double Mpp() const { return gram(kAMinus, kBPlus).real(); }
  // C = <E_A^-|E_B^+> + <E_B^+|E_A^->,  C' = <E_A^-|E_A^-> + <E_B^+|E_B^+>
  cd Cc() const { return gram(kAPlus, kBPlus) + gram(kBMinus, kAMinus); }
  cd Cp() const { return gram(kAPlus, kAMinus) + gram(kBMinus, kBPlus); }
  // <E_A^-|E_A^-> and <E_B^-|E_B^->
  cd GAA() const { return gram(kAPlus, kAMinus); }
  cd GBB() const { return gram(kBPlus, kBMinus); }
  // fourth-order |11><11| weight reinstated for the |00> state
  double rho44() const { return std::norm(M()) + std::norm(XAB()) + PA() * PB(); }

  CorrelatorSet scaled(double factor) const;
  static CorrelatorSet zero() { return {}; }
};

// Evaluates every Gram entry and pair amplitude with one shared configuration.
CorrelatorSet correlator_set(Scenario scenario, const TrajectoryParams& tparams,
                             const DetectorParams& dparams, const QuadratureConfig& qcfg);

// Inertial closed forms:
//   |E|^2 = lambda^2/(4 pi) [e^{-sigma^2 Omega^2} - sqrt(pi) sigma Omega erfc(sigma Omega)]
//   M = i lambda^2 sigma / (4 sqrt(pi) L) e^{-sigma^2 Omega^2 - L^2/4sigma^2} [erf(i L/2sigma) - 1]
struct InertialClosedForms {
  double E2 = 0.0;
  cd M;
};
InertialClosedForms inertial_closed_forms(const DetectorParams& dparams, double L);

// De-excitation probability of an inertial detector, the Omega -> -Omega image of E2.
double inertial_deexcitation(const DetectorParams& dparams);

}  // namespace udw
