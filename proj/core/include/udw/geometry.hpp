#pragma once

#include <complex>
#include <string_view>

namespace udw {

// Worldline families. Inertial ignores the acceleration.
enum class Scenario { Inertial, Parallel, Antiparallel, Perpendicular };

enum class Detector { A, B };

std::string_view to_string(Scenario s);
Scenario parse_scenario(std::string_view name);

struct TrajectoryParams {
  double a = 0.0;  // proper acceleration, a >= 0
  double L = 0.5;  // initial separation, L > 0

  void validate() const;
};

struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Below |a*tau| < kSmallAccelerationThreshold the hyperbolic functions are
// replaced by their two-term Taylor series.
inline constexpr double kSmallAccelerationThreshold = 1e-4;

// Point on the detector's worldline at proper time tau.
//
// Parallel:      A = (sinh(a tau)/a, L/2 + (cosh(a tau)-1)/a, 0, 0)
//                B = (sinh(a tau)/a, -L/2 + (cosh(a tau)-1)/a, 0, 0)
// Antiparallel:  as parallel, but B moves towards -x.
// Perpendicular: A = (sinh/a, 0, (cosh-1)/a, 0), B = (sinh/a, L + (cosh-1)/a, 0, 0)
// Inertial:      A at x = +L/2, B at x = -L/2; for Perpendicular the a -> 0
//                limit places A at the origin and B at x = L.
SpacetimePoint worldline(Scenario scenario, Detector detector, const TrajectoryParams& params,
                         double tau);

// Taylor branch used by worldline() when |a tau| is below the threshold.
SpacetimePoint worldline_small_a(Scenario scenario, Detector detector,
                                 const TrajectoryParams& params, double tau);

// sinh(a tau)/a and (cosh(a tau) - 1)/a with the a -> 0 limit handled.
double boost_time(double a, double tau);
double boost_excursion(double a, double tau);

// Coordinate-time difference and invariant interval between x_i(tau) and
// x_j(tau_p):  dt = t_i - t_j,  interval = dt^2 - |dx|^2.
// For i == j the interval is evaluated in closed form, 4 sinh^2(a s / 2) / a^2
// with s = tau - tau_p, so it stays accurate near coincidence.
struct Separation {
  double dt = 0.0;
  double interval = 0.0;
};

Separation separation(Scenario scenario, Detector i, Detector j, const TrajectoryParams& params,
                      double tau, double tau_p);

// Interval between x_i(tau - i shift/2) and x_j(tau_p + i shift/2), the
// worldlines continued to complex proper time. Written as
//   U^2 - kappa e(p) e(q) - 2 L lin(e(p), e(q)) - L^2,  U = 2 sinh(a (p - q)/2)/a,
// with e the excursion (cosh(a tau) - 1)/a, so no large terms cancel.
// shift = 0 reproduces separation().interval.
std::complex<double> complex_interval(Scenario scenario, Detector i, Detector j,
                                      const TrajectoryParams& params, double tau, double tau_p,
                                      double shift);

// dt/dtau along the worldline (the same for both detectors in every scenario).
double time_dilation(Scenario scenario, const TrajectoryParams& params, double tau);

}  // namespace udw
