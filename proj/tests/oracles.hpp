#pragma once

// Brute-force reference for the non-local SRE of a pure two-qubit state.
//
// Every pure state is locally equivalent to its Schmidt form c|00> + s|11>, so
// min over U x V of M2 equals the minimum over the orbit of that form. M2 is
// invariant under local Cliffords, which lets the outer Rz angle range over
// [0, pi/2) and the Ry angle over [0, pi). On the Schmidt form Rz(l_A) x Rz(l_B)
// only depends on l_A + l_B, so one inner angle in [0, 2 pi) suffices.
// All five angles step by pi / divisions.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "udw/resources.hpp"

namespace udw::oracle {

inline double m2_of_coefficients(const Eigen::Matrix2cd& psi) {
  static const std::array<Eigen::Matrix2cd, 4> sigma = [] {
    std::array<Eigen::Matrix2cd, 4> s;
    s[0] = Eigen::Matrix2cd::Identity();
    s[1] << 0, 1, 1, 0;
    s[2] << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  // <P_a x P_b> = Tr(psi^dagger sigma_a psi sigma_b^T)
  double sum = 0.0;
  for (int a = 0; a < 4; ++a) {
    const Eigen::Matrix2cd left = psi.adjoint() * sigma[a] * psi;
    for (int b = 0; b < 4; ++b) {
      const double t = (left * sigma[b].transpose()).trace().real();
      sum += t * t * t * t;
    }
  }
  return -std::log2(0.25 * sum);
}

inline double nonlocal_sre_grid(const Eigen::Vector4cd& state, int divisions = 24) {
  Eigen::Matrix2cd coeff;
  coeff << state(0), state(1), state(2), state(3);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(coeff);
  const Eigen::Vector2d sv = svd.singularValues() / svd.singularValues().norm();
  Eigen::Matrix2cd schmidt = Eigen::Matrix2cd::Zero();
  schmidt(0, 0) = sv(0);
  schmidt(1, 1) = sv(1);

  const double step = std::numbers::pi / divisions;
  std::vector<Eigen::Matrix2cd> left, right;
  for (int i = 0; i < divisions / 2; ++i)
    for (int j = 0; j < divisions; ++j) {
      right.push_back(LocalUnitary::su2({i * step, j * step, 0.0}));
      for (int k = 0; k < 2 * divisions; ++k) left.push_back(LocalUnitary::su2({i * step, j * step, k * step}));
    }
  double best = std::numeric_limits<double>::infinity();
  for (const Eigen::Matrix2cd& u : left) {
    const Eigen::Matrix2cd us = u * schmidt;
    for (const Eigen::Matrix2cd& v : right) best = std::min(best, m2_of_coefficients(us * v.transpose()));
  }
  return std::max(best, 0.0);
}

}  // namespace udw::oracle
