#include "udw/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace udw {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::Inertial: return "inertial";
    case Scenario::Parallel: return "parallel";
    case Scenario::Antiparallel: return "antiparallel";
    case Scenario::Perpendicular: return "perpendicular";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "inertial") return Scenario::Inertial;
  if (name == "parallel") return Scenario::Parallel;
  if (name == "antiparallel") return Scenario::Antiparallel;
  if (name == "perpendicular") return Scenario::Perpendicular;
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

void TrajectoryParams::validate() const {
  if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("acceleration must be finite and >= 0");
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("separation L must be finite and > 0");
}

namespace {

// sinh(a x) / a, stable for small a x.
double sinh_over(double a, double x) {
  const double ax = a * x;
  if (std::abs(ax) < kSmallAccelerationThreshold) return x * (1.0 + ax * ax / 6.0);
  return std::sinh(ax) / a;
}

// Spatial part of the worldline: x, y given the excursion e = (cosh a tau - 1)/a.
SpacetimePoint place(Scenario scenario, Detector detector, double L, double t, double e) {
  SpacetimePoint p;
  p.t = t;
  const bool is_a = detector == Detector::A;
  switch (scenario) {
    case Scenario::Inertial:
      p.x = is_a ? 0.5 * L : -0.5 * L;
      break;
    case Scenario::Parallel:
      p.x = (is_a ? 0.5 * L : -0.5 * L) + e;
      break;
    case Scenario::Antiparallel:
      p.x = is_a ? 0.5 * L + e : -0.5 * L - e;
      break;
    case Scenario::Perpendicular:
      if (is_a) {
        p.y = e;
      } else {
        p.x = L + e;
      }
      break;
  }
  return p;
}

template <class T>
T sinh_over_t(double a, T z) {
  const T az = a * z;
  if (std::abs(az) < kSmallAccelerationThreshold) return z * (1.0 + az * az / 6.0);
  return std::sinh(az) / a;
}

template <class T>
T excursion_t(double a, T z) {
  const T az = a * z;
  if (std::abs(az) < kSmallAccelerationThreshold) return 0.5 * a * z * z * (1.0 + az * az / 12.0);
  const T h = std::sinh(0.5 * az);
  return 2.0 * h * h / a;
}

// (e^{a z} - 1) / a
template <class T>
T expm1_over_t(double a, T z) {
  const T az = a * z;
  if (std::abs(az) < kSmallAccelerationThreshold) return z * (1.0 + az * (0.5 + az / 6.0));
  return (std::exp(az) - 1.0) / a;
}

// p = tau_i, q = tau_j. The collinear cases are products of null-coordinate
// differences; perpendicular is U^2 - 2 e_A e_B - 2 L e_B - L^2.
template <class T>
T interval_t(Scenario scenario, Detector i, Detector j, const TrajectoryParams& params, T p, T q) {
  const double a = scenario == Scenario::Inertial ? 0.0 : params.a;
  const T u = 2.0 * sinh_over_t(a, T(0.5) * (p - q));
  if (i == j) return u * u;
  const double L = params.L;
  if (scenario == Scenario::Inertial) return u * u - L * L;
  if (i == Detector::B) std::swap(p, q);  // p on A, q on B; f is symmetric
  switch (scenario) {
    case Scenario::Parallel:
      return -(L + expm1_over_t(a, p) - expm1_over_t(a, q)) *
             (L + expm1_over_t(a, T(-p)) - expm1_over_t(a, T(-q)));
    case Scenario::Antiparallel:
      return -(L + expm1_over_t(a, T(-p)) + expm1_over_t(a, q)) *
             (L + expm1_over_t(a, p) + expm1_over_t(a, T(-q)));
    case Scenario::Perpendicular: {
      const T ea = excursion_t(a, p);
      const T eb = excursion_t(a, q);
      return u * u - 2.0 * ea * eb - 2.0 * L * eb - L * L;
    }
    case Scenario::Inertial: break;
  }
  return u * u - L * L;
}

}  // namespace

double boost_time(double a, double tau) { return sinh_over(a, tau); }

double boost_excursion(double a, double tau) {
  const double at = a * tau;
  if (std::abs(at) < kSmallAccelerationThreshold) {
    const double tau2 = tau * tau;
    return 0.5 * a * tau2 * (1.0 + at * at / 12.0);
  }
  const double h = std::sinh(0.5 * at);
  return 2.0 * h * h / a;
}

SpacetimePoint worldline_small_a(Scenario scenario, Detector detector,
                                 const TrajectoryParams& params, double tau) {
  const double a = scenario == Scenario::Inertial ? 0.0 : params.a;
  const double at = a * tau;
  const double t = tau * (1.0 + at * at / 6.0);
  const double e = 0.5 * a * tau * tau * (1.0 + at * at / 12.0);
  return place(scenario, detector, params.L, t, e);
}

SpacetimePoint worldline(Scenario scenario, Detector detector, const TrajectoryParams& params,
                         double tau) {
  if (!std::isfinite(tau)) throw std::invalid_argument("proper time must be finite");
  if (scenario == Scenario::Inertial) return place(scenario, detector, params.L, tau, 0.0);
  const double a = params.a;
  if (std::abs(a * tau) < kSmallAccelerationThreshold) {
    return worldline_small_a(scenario, detector, params, tau);
  }
  const double h = std::sinh(0.5 * a * tau);
  return place(scenario, detector, params.L, std::sinh(a * tau) / a, 2.0 * h * h / a);
}

double time_dilation(Scenario scenario, const TrajectoryParams& params, double tau) {
  if (scenario == Scenario::Inertial) return 1.0;
  return std::cosh(params.a * tau);
}

Separation separation(Scenario scenario, Detector i, Detector j, const TrajectoryParams& params,
                      double tau, double tau_p) {
  const double a = scenario == Scenario::Inertial ? 0.0 : params.a;
  const double s = tau - tau_p;
  const double m = 0.5 * (tau + tau_p);
  Separation out;
  // t(tau) - t(tau_p) = 2 cosh(a m) sinh(a s / 2) / a
  const double half = sinh_over(a, 0.5 * s);
  out.dt = 2.0 * std::cosh(a * m) * half;
  out.interval = interval_t(scenario, i, j, params, tau, tau_p);
  return out;
}

std::complex<double> complex_interval(Scenario scenario, Detector i, Detector j,
                                      const TrajectoryParams& params, double tau, double tau_p,
                                      double shift) {
  using cplx = std::complex<double>;
  return interval_t(scenario, i, j, params, cplx(tau, -0.5 * shift), cplx(tau_p, 0.5 * shift));
}

}  // namespace udw
