#include <gtest/gtest.h>

#include <cmath>

#include "udw/geometry.hpp"

using namespace udw;

namespace {

double minkowski(const SpacetimePoint& p, const SpacetimePoint& q) {
  const double dt = p.t - q.t, dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
  return dt * dt - dx * dx - dy * dy - dz * dz;
}

double proper_acceleration(Scenario sc, Detector d, const TrajectoryParams& p, double tau) {
  const double h = 1e-3;
  auto at = [&](double s) { return worldline(sc, d, p, s); };
  const SpacetimePoint m = at(tau - h), c = at(tau), n = at(tau + h);
  const double at2 = (n.t - 2 * c.t + m.t) / (h * h);
  const double ax = (n.x - 2 * c.x + m.x) / (h * h);
  const double ay = (n.y - 2 * c.y + m.y) / (h * h);
  return std::sqrt(std::max(0.0, ax * ax + ay * ay - at2 * at2));
}

}  // namespace

TEST(Geometry, WorldlinesStartAtTheConfiguredSeparation) {
  const TrajectoryParams p{1.3, 0.7};
  for (Scenario sc : {Scenario::Parallel, Scenario::Antiparallel, Scenario::Perpendicular, Scenario::Inertial}) {
    const SpacetimePoint a = worldline(sc, Detector::A, p, 0.0);
    const SpacetimePoint b = worldline(sc, Detector::B, p, 0.0);
    EXPECT_NEAR(-minkowski(a, b), p.L * p.L, 1e-14) << to_string(sc);
  }
}

TEST(Geometry, ProperTimeParametrization) {
  const TrajectoryParams p{0.8, 0.5};
  for (Scenario sc : {Scenario::Parallel, Scenario::Antiparallel, Scenario::Perpendicular})
    for (Detector d : {Detector::A, Detector::B})
      for (double tau : {-2.0, 0.3, 1.7}) {
        const double h = 1e-5;
        const double ds2 = minkowski(worldline(sc, d, p, tau + h), worldline(sc, d, p, tau - h));
        EXPECT_NEAR(std::sqrt(ds2) / (2 * h), 1.0, 1e-8);
      }
}

TEST(Geometry, UniformProperAcceleration) {
  const TrajectoryParams p{1.5, 0.5};
  for (Scenario sc : {Scenario::Parallel, Scenario::Antiparallel, Scenario::Perpendicular})
    for (double tau : {-1.0, 0.0, 0.9})
      EXPECT_NEAR(proper_acceleration(sc, Detector::A, p, tau), p.a, 1e-4);
}

TEST(Geometry, SmallAccelerationBranchIsContinuous) {
  // At the switch-over both branches describe the same point.
  const double tau = 0.5;
  const TrajectoryParams edge{1.01e-4 / tau, 0.5};
  for (Scenario sc : {Scenario::Parallel, Scenario::Antiparallel, Scenario::Perpendicular})
    for (Detector d : {Detector::A, Detector::B}) {
      const SpacetimePoint exact = worldline(sc, d, edge, tau);
      const SpacetimePoint series = worldline_small_a(sc, d, edge, tau);
      EXPECT_NEAR(exact.t, series.t, 1e-13);
      EXPECT_NEAR(exact.x, series.x, 1e-13);
      EXPECT_NEAR(exact.y, series.y, 1e-13);
    }
}

TEST(Geometry, ZeroAccelerationIsInertial) {
  const TrajectoryParams p{0.0, 0.5};
  const SpacetimePoint a = worldline(Scenario::Parallel, Detector::A, p, 2.0);
  EXPECT_DOUBLE_EQ(a.t, 2.0);
  EXPECT_DOUBLE_EQ(a.x, 0.25);
  const Separation s = separation(Scenario::Parallel, Detector::A, Detector::B, p, 1.0, 0.2);
  EXPECT_NEAR(s.dt, 0.8, 1e-15);
  EXPECT_NEAR(s.interval, 0.64 - 0.25, 1e-14);
}

TEST(Geometry, SeparationMatchesWorldlines) {
  const TrajectoryParams p{2.0, 0.5};
  for (Scenario sc : {Scenario::Parallel, Scenario::Antiparallel, Scenario::Perpendicular, Scenario::Inertial})
    for (Detector i : {Detector::A, Detector::B})
      for (Detector j : {Detector::A, Detector::B}) {
        const double tau = 0.4, tau_p = -0.9;
        const SpacetimePoint x = worldline(sc, i, p, tau), y = worldline(sc, j, p, tau_p);
        const Separation s = separation(sc, i, j, p, tau, tau_p);
        EXPECT_NEAR(s.dt, x.t - y.t, 1e-12);
        EXPECT_NEAR(s.interval, minkowski(x, y), 1e-11 * (1 + std::abs(s.interval)));
        EXPECT_NEAR(complex_interval(sc, i, j, p, tau, tau_p, 0.0).real(), s.interval,
                    1e-11 * (1 + std::abs(s.interval)));
      }
}

TEST(Geometry, SelfIntervalIsAccurateNearCoincidence) {
  const TrajectoryParams p{3.0, 0.5};
  const double s = (1.0 + 1e-9) - 1.0;
  const double expect = 4 * std::pow(std::sinh(p.a * s / 2) / p.a, 2);
  const Separation sep = separation(Scenario::Parallel, Detector::A, Detector::A, p, 1.0 + s, 1.0);
  EXPECT_NEAR(sep.interval / expect, 1.0, 1e-9);
}

TEST(Geometry, ComplexIntervalMatchesContinuation) {
  // f(tau - i e/2, tau' + i e/2) from the explicit complex worldline formula.
  const TrajectoryParams p{1.2, 0.5};
  const double tau = 0.7, tau_p = 0.1, e = 0.05;
  using cd = std::complex<double>;
  const cd ta(tau, -e / 2), tb(tau_p, e / 2);
  const double a = p.a;
  const cd t1 = std::sinh(a * ta) / a, t2 = std::sinh(a * tb) / a;
  const cd x1 = p.L / 2 + (std::cosh(a * ta) - 1.0) / a, x2 = -p.L / 2 + (std::cosh(a * tb) - 1.0) / a;
  const cd f = (t1 - t2) * (t1 - t2) - (x1 - x2) * (x1 - x2);
  const cd got = complex_interval(Scenario::Parallel, Detector::A, Detector::B, p, tau, tau_p, e);
  EXPECT_NEAR(std::abs(got - f), 0.0, 1e-12);
}

TEST(Geometry, TimeDilation) {
  const TrajectoryParams p{0.6, 0.5};
  EXPECT_NEAR(time_dilation(Scenario::Parallel, p, 1.3), std::cosh(0.6 * 1.3), 1e-14);
  EXPECT_DOUBLE_EQ(time_dilation(Scenario::Inertial, p, 1.3), 1.0);
}

TEST(Geometry, ParsingAndValidation) {
  EXPECT_EQ(parse_scenario("antiparallel"), Scenario::Antiparallel);
  EXPECT_THROW(parse_scenario("sideways"), std::invalid_argument);
  EXPECT_THROW((TrajectoryParams{-1.0, 0.5}.validate()), std::invalid_argument);
  EXPECT_THROW((TrajectoryParams{1.0, 0.0}.validate()), std::invalid_argument);
}
