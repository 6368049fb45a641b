#include <gtest/gtest.h>

#include <cmath>

#include "udw/dynamics.hpp"

using namespace udw;

namespace {

CorrelatorSet sample(double lambda) {
  static const CorrelatorSet unit = correlator_set(Scenario::Parallel, {1.5, 0.5}, {2.0, 1.0, 1.0}, {});
  return unit.scaled(lambda * lambda);
}

bool hermitian_unit_trace(const DensityMatrix& r) {
  return (r.matrix() - r.matrix().adjoint()).norm() < 1e-12 && std::abs(r.matrix().trace() - 1.0) < 1e-12;
}

}  // namespace

TEST(DensityMatrix, DefaultIsZeroZero) {
  const DensityMatrix r;
  EXPECT_DOUBLE_EQ(r(0, 0).real(), 1.0);
  EXPECT_DOUBLE_EQ(r.matrix().norm(), 1.0);
}

TEST(DensityMatrix, ValidationRejectsBadInput) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 0.5;
  EXPECT_THROW(DensityMatrix{m}, std::invalid_argument);  // trace
  m(1, 1) = 0.5;
  m(0, 1) = cd(0.0, 0.1);
  EXPECT_THROW(DensityMatrix{m}, std::invalid_argument);  // not Hermitian
  m(0, 1) = 0.0;
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  EXPECT_THROW(DensityMatrix{m}, std::invalid_argument);  // negative
  EXPECT_NO_THROW(DensityMatrix(m, true));
}

TEST(DensityMatrix, ClipRemovesNegativeWeight) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1.1;
  m(1, 1) = -0.1;
  const DensityMatrix c = DensityMatrix(m, true).clip();
  EXPECT_TRUE(c.clipped());
  EXPECT_NEAR(c.clipped_weight(), 0.1, 1e-15);
  EXPECT_NEAR(c(0, 0).real(), 1.0, 1e-15);
  EXPECT_GE(c.min_eigenvalue(), -1e-15);
}

TEST(InitialStates, NamedPreparations) {
  EXPECT_EQ(parse_initial("bell"), InitialKind::BellPhiPlus);
  EXPECT_EQ(parse_initial("0T"), InitialKind::ZeroT);
  EXPECT_THROW(parse_initial("11"), std::invalid_argument);
  const DensityMatrix bell = InitialState{InitialKind::BellPhiPlus, {}}.density();
  EXPECT_NEAR(bell(0, 3).real(), 0.5, 1e-15);
  const Vector4 t = zero_t_vector();
  EXPECT_NEAR(t.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::arg(t(1) / t(0)), std::acos(-1.0) / 4, 1e-15);
}

TEST(FinalState, UncoupledIsIdentityMap) {
  const CorrelatorSet z = CorrelatorSet::zero();
  for (InitialKind k : {InitialKind::ZeroZero, InitialKind::BellPhiPlus, InitialKind::ZeroT}) {
    const DensityMatrix r0 = InitialState{k, {}}.density();
    EXPECT_LT((final_state(InitialState{k, {}}, z).matrix() - r0.matrix()).norm(), 1e-15);
  }
}

TEST(FinalState, ZeroZeroStructure) {
  const CorrelatorSet c = sample(0.1);
  const DensityMatrix r = final_state_00(c);
  EXPECT_TRUE(hermitian_unit_trace(r));
  EXPECT_NEAR(r(1, 1).real(), c.PB(), 1e-15);
  EXPECT_NEAR(r(2, 2).real(), c.PA(), 1e-15);
  EXPECT_NEAR(r(3, 3).real(), c.rho44(), 1e-15);
  EXPECT_NEAR(std::abs(r(0, 3)), std::abs(c.M()), 1e-15);
  EXPECT_NEAR(std::abs(r(1, 2)), std::abs(c.XAB()), 1e-15);
  EXPECT_GE(r.min_eigenvalue(), -1e-12);
}

// The explicit element formulas agree with the generic second-order map up to O(lambda^4).
TEST(FinalState, ElementFormulasMatchGenericMap) {
  for (InitialKind k : {InitialKind::ZeroZero, InitialKind::BellPhiPlus, InitialKind::ZeroT}) {
    double prev = 0.0;
    for (double lambda : {0.1, 0.05}) {
      const CorrelatorSet c = sample(lambda);
      const InitialState init{k, {}};
      const Matrix4 d = final_state(init, c, PositivityMode::Raw).matrix() - cptp_generic(init.density(), c).matrix();
      const double err = d.norm();
      EXPECT_LT(err, 1e-2 * lambda * lambda) << to_string(k);
      if (prev > 1e-15) EXPECT_GT(prev / std::max(err, 1e-300), 10.0) << to_string(k);
      prev = err;
    }
  }
}

TEST(FinalState, ClipModeIsPositive) {
  for (InitialKind k : {InitialKind::BellPhiPlus, InitialKind::ZeroT}) {
    const DensityMatrix r = final_state(InitialState{k, {}}, sample(0.3), PositivityMode::Clip);
    EXPECT_TRUE(hermitian_unit_trace(r));
    EXPECT_GE(r.min_eigenvalue(), -1e-12);
  }
  const DensityMatrix raw = final_state_bell(sample(0.3), PositivityMode::Raw);
  EXPECT_TRUE(hermitian_unit_trace(raw));
}

TEST(FinalState, RejectsInconsistentCorrelators) {
  CorrelatorSet c = sample(0.1);
  c.gram(kAPlus, kAPlus) = -0.1;
  EXPECT_THROW(final_state_00(c), CorrelatorError);
  c = sample(0.1);
  c.gram(kAPlus, kBPlus) = 10.0;
  EXPECT_THROW(final_state_00(c), CorrelatorError);
  c = sample(0.1);
  c.pair(0, 0) = cd(std::nan(""), 0.0);
  EXPECT_THROW(final_state_00(c), CorrelatorError);
}
