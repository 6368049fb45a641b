#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "udw/correlators.hpp"

using namespace udw;

namespace {

const DetectorParams kUnit{2.0, 1.0, 1.0};

double rel(double got, double expect) { return std::abs(got - expect) / std::abs(expect); }

}  // namespace

TEST(Wightman, PointFormMatchesIntervalForm) {
  const SpacetimePoint p{1.0, 0.3, 0.0, 0.0}, q{0.2, -0.1, 0.4, 0.0};
  const double dt = 0.8, f = dt * dt - 0.16 - 0.16;
  EXPECT_NEAR(std::abs(wightman(p, q, 0.01) - wightman_from(dt, f, 0.01)), 0.0, 1e-12);
  const cd w = wightman_from(0.0, -1.0, 1e-300);
  EXPECT_NEAR(w.real(), 1.0 / (4 * std::numbers::pi * std::numbers::pi), 1e-15);
}

TEST(Wightman, DistributionalSplit) {
  const auto in = wightman_inertial_distributional(2.0, 1.0);
  EXPECT_DOUBLE_EQ(in.delta_coefficient, 1.0);
  EXPECT_NEAR(in.pv_part, -1.0 / (4 * std::numbers::pi * std::numbers::pi * 3.0), 1e-15);
  EXPECT_DOUBLE_EQ(wightman_inertial_distributional(-2.0, 1.0).delta_coefficient, -1.0);
  EXPECT_THROW(wightman_inertial_distributional(1.0, 1.0), std::domain_error);
}

TEST(Correlators, InertialExcitationClosedForm) {
  for (double sigma : {0.5, 1.0, 2.0})
    for (double os : {0.5, 2.0}) {
      const DetectorParams d{os / sigma, 1.0, sigma};
      const CorrelatorValue v =
          correlator(Detector::A, Sign::Minus, Detector::A, Sign::Plus, Scenario::Inertial, {0.0, 0.5}, d, {});
      EXPECT_LT(rel(v.value.real(), inertial_closed_forms(d, 0.5).E2), 1e-4) << sigma << " " << os;
      EXPECT_NEAR(v.value.imag(), 0.0, 1e-8);
      EXPECT_TRUE(v.converged);
    }
}

TEST(Correlators, InertialDeexcitationClosedForm) {
  const CorrelatorSet c = correlator_set(Scenario::Inertial, {0.0, 0.5}, kUnit, {});
  EXPECT_LT(rel(c.QA(), inertial_deexcitation(kUnit)), 1e-4);
  EXPECT_LT(rel(c.QB(), c.QA()), 1e-12);
}

TEST(Correlators, InertialPairAmplitudeClosedForm) {
  for (double L : {0.5, 1.0, 2.0}) {
    const CorrelatorSet c = correlator_set(Scenario::Inertial, {0.0, L}, kUnit, {});
    const cd m = inertial_closed_forms(kUnit, L).M;
    EXPECT_LT(std::abs(c.M() - m) / std::abs(m), 1e-3) << L;
    EXPECT_LT(std::abs(c.N() - c.M()) / std::abs(m), 1e-3) << L;
  }
}

TEST(Correlators, ClosedFormLimits) {
  // |E|^2 -> lambda^2 / 4 pi as Omega sigma -> 0 and decreases monotonically.
  DetectorParams d{0.0, 1.0, 1.0};
  EXPECT_NEAR(inertial_closed_forms(d, 1.0).E2, 1.0 / (4 * std::numbers::pi), 1e-15);
  double prev = 1.0;
  for (double x = 0.0; x <= 4.0; x += 0.25) {
    d.omega = x;
    const double e2 = inertial_closed_forms(d, 1.0).E2;
    EXPECT_GT(e2, 0.0);
    EXPECT_LT(e2, prev);
    prev = e2;
  }
}

TEST(Correlators, AcceleratedExcitationReference) {
  // Independent contour-integral references at Omega = 2, sigma = 1, lambda = 1.
  const std::pair<double, double> ref[] = {{0.5, 2.09823203e-4}, {2.0, 4.20277807e-3}, {4.0, 3.32436072e-2}};
  for (auto [a, pa] : ref) {
    const CorrelatorSet c = correlator_set(Scenario::Parallel, {a, 0.5}, kUnit, {});
    EXPECT_LT(rel(c.PA(), pa), 1e-4) << a;
    EXPECT_EQ(c.PB(), c.PA()) << a;
  }
}

TEST(Correlators, GramMatrixIsHermitianPositive) {
  for (Scenario sc : {Scenario::Parallel, Scenario::Antiparallel, Scenario::Perpendicular}) {
    const CorrelatorSet c = correlator_set(sc, {1.5, 0.5}, kUnit, {});
    EXPECT_LT((c.gram - c.gram.adjoint()).norm(), 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(c.gram);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-4 * es.eigenvalues().maxCoeff()) << to_string(sc);
    EXPECT_LE(std::norm(c.XAB()), c.PA() * c.PB() * (1 + 1e-3));
    EXPECT_TRUE(c.converged);
  }
}

TEST(Correlators, ZeroAccelerationMatchesInertial) {
  const CorrelatorSet p = correlator_set(Scenario::Parallel, {0.0, 0.5}, kUnit, {});
  const CorrelatorSet i = correlator_set(Scenario::Inertial, {0.0, 0.5}, kUnit, {});
  EXPECT_LT((p.gram - i.gram).norm(), 1e-10);
  EXPECT_LT((p.pair - i.pair).norm(), 1e-10);
}

TEST(Correlators, ScalesWithLambdaSquared) {
  DetectorParams d = kUnit;
  d.lambda = 0.1;
  const CorrelatorSet a = correlator_set(Scenario::Perpendicular, {1.0, 0.5}, d, {});
  d.lambda = 0.2;
  const CorrelatorSet b = correlator_set(Scenario::Perpendicular, {1.0, 0.5}, d, {});
  EXPECT_LT((b.gram - 4.0 * a.gram).norm(), 1e-12 * b.gram.norm());
  EXPECT_LT((a.scaled(4.0).pair - b.pair).norm(), 1e-12 * b.pair.norm());
}

TEST(Correlators, WindowAndRegulatorStability) {
  QuadratureConfig wide;
  wide.window = 8.0;
  QuadratureConfig shifted;
  shifted.eps_schedule = {0.05, 0.025, 0.0125, 0.00625};
  for (Scenario sc : {Scenario::Parallel, Scenario::Antiparallel}) {
    const CorrelatorSet base = correlator_set(sc, {2.0, 0.5}, kUnit, {});
    const CorrelatorSet w = correlator_set(sc, {2.0, 0.5}, kUnit, wide);
    const CorrelatorSet e = correlator_set(sc, {2.0, 0.5}, kUnit, shifted);
    const double scale = base.gram.norm();
    EXPECT_LT((w.gram - base.gram).norm(), 1e-5 * scale) << to_string(sc);
    EXPECT_LT((e.gram - base.gram).norm(), 1e-4 * scale) << to_string(sc);
    EXPECT_LT(std::abs(w.M() - base.M()), 1e-5 * scale);
    EXPECT_LT(std::abs(e.M() - base.M()), 1e-4 * scale);
  }
}

TEST(Correlators, ConfigValidation) {
  QuadratureConfig q;
  q.window = 2.0;
  EXPECT_THROW(q.validate(), std::invalid_argument);
  q = {};
  q.eps_schedule = {0.1, 0.2};
  EXPECT_THROW(q.validate(), std::invalid_argument);
  EXPECT_THROW((DetectorParams{2.0, 1.0, -1.0}.validate()), std::invalid_argument);
}
