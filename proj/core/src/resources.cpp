#include "udw/resources.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "udw/pauli.hpp"

namespace udw {

namespace {

constexpr int kXX = 5, kXZ = 7, kZX = 13, kZZ = 15;

}  // namespace

double concurrence(const DensityMatrix& rho) {
  // With rho = X X^dagger, the square roots of the eigenvalues of rho rho~ are the
  // singular values of X^T (Y x Y) X, which avoids square roots of rounding noise.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix());
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed in concurrence");
  const Eigen::Vector4d w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd x = es.eigenvectors() * w.cast<cd>().asDiagonal();
  const Eigen::Matrix4cd tau = x.transpose() * pauli_string_matrices()[10] * x;  // YY
  const Eigen::Vector4d l = Eigen::JacobiSVD<Eigen::Matrix4cd>(tau).singularValues();  // descending
  return std::clamp(l(0) - l(1) - l(2) - l(3), 0.0, 1.0);
}

double concurrence_perturbative(const CorrelatorSet& corr) {
  const double pp = std::max(corr.PA(), 0.0) * std::max(corr.PB(), 0.0);
  return std::max(0.0, 2.0 * (std::abs(corr.M()) - std::sqrt(pp)));
}

std::array<double, 16> pauli_expectations(const Eigen::Matrix4cd& rho) {
  std::array<double, 16> out{};
  const auto& mats = pauli_string_matrices();
  for (int k = 0; k < 16; ++k) out[k] = (mats[k] * rho).trace().real();
  return out;
}

double sre2_M2(const Eigen::Matrix4cd& rho) {
  double sum = 0.0;
  for (double e : pauli_expectations(rho)) sum += e * e * e * e;
  return -std::log2(0.25 * sum);
}

Sre2 sre2(const DensityMatrix& rho) {
  Sre2 out;
  out.M2 = sre2_M2(rho.matrix());
  out.S2 = -std::log2(purity(rho));
  out.M2_tilde = out.M2 - out.S2;
  return out;
}

double sre2_perturbative(const CorrelatorSet& corr) {
  const double p = corr.PA() + corr.PB();
  const double a = 1.0 - 4.0 * p;
  const double b = 1.0 - 2.0 * p;
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("PA + PB outside the perturbative SRE regime");
  return -std::log2(a) + std::log2(b);
}

double purity(const DensityMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

double bell_expectation(const DensityMatrix& rho) {
  const auto e = pauli_expectations(rho);
  return e[kXX] + e[kXZ] - e[kZX] + e[kZZ];
}

double bell_perturbative(const CorrelatorSet& c, InitialKind initial) {
  switch (initial) {
    case InitialKind::ZeroZero:
      return 1.0 - 2.0 * c.PA() - 2.0 * c.PB() + 2.0 * (c.M() + c.XAB()).real();
    case InitialKind::BellPhiPlus:
      return 2.0 - 1.5 * (c.PA() + c.PB() + c.QA() + c.QB()) + 2.0 * (c.M() + c.N()).real() -
             (c.Mp() + c.Mpp()) + (c.Cc() + c.Cp()).real();
    default: break;
  }
  throw std::invalid_argument("bell_perturbative supports only the 00 and bell initial states");
}

double pauli_bell_max(const DensityMatrix& rho, bool distinct_settings) {
  const auto e = pauli_expectations(rho);
  auto corr = [&](int a, int b) { return e[4 * a + b]; };
  double best = -1e300;
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= 3; ++a2)
      for (int b1 = 1; b1 <= 3; ++b1)
        for (int b2 = 1; b2 <= 3; ++b2) {
          if (distinct_settings && (a1 == a2 || b1 == b2)) continue;
          for (int signs = 0; signs < 16; ++signs) {
            const double sa1 = (signs & 1) ? -1.0 : 1.0;
            const double sa2 = (signs & 2) ? -1.0 : 1.0;
            const double sb1 = (signs & 4) ? -1.0 : 1.0;
            const double sb2 = (signs & 8) ? -1.0 : 1.0;
            const double v = sa1 * (sb1 * corr(a1, b1) + sb2 * corr(a1, b2)) +
                             sa2 * (sb1 * corr(a2, b1) - sb2 * corr(a2, b2));
            best = std::max(best, v);
          }
        }
  return best;
}

double schmidt_family_check(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("Schmidt weight must lie in [0, 1]");
  Vector4 psi = Vector4::Zero();
  psi(0) = std::sqrt(x);
  psi(3) = std::sqrt(1.0 - x);
  return bell_expectation(DensityMatrix::pure(psi));
}

Eigen::Matrix2cd LocalUnitary::su2(const std::array<double, 3>& g) {
  auto rz = [](double t) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::polar(1.0, -0.5 * t);
    m(1, 1) = std::polar(1.0, 0.5 * t);
    return m;
  };
  Eigen::Matrix2cd ry;
  ry << std::cos(0.5 * g[1]), -std::sin(0.5 * g[1]), std::sin(0.5 * g[1]), std::cos(0.5 * g[1]);
  return rz(g[0]) * ry * rz(g[2]);
}

Eigen::Matrix4cd LocalUnitary::matrix() const { return kron(su2(angles_A), su2(angles_B)); }

}  // namespace udw
