#pragma once

#include <array>

#include <Eigen/Dense>

#include "udw/correlators.hpp"
#include "udw/dynamics.hpp"

namespace udw {

// Wootters concurrence max(0, l1 - l2 - l3 - l4), l the square roots of the eigenvalues
// of rho rho~ in decreasing order,
// rho~ = (Y x Y) rho* (Y x Y). Throws std::runtime_error if the eigensolver fails.
double concurrence(const DensityMatrix& rho);

// max{0, 2(|M| - sqrt(PA PB))}
double concurrence_perturbative(const CorrelatorSet& corr);

// Tr(P rho) in the pauli_strings() order; entry 0 (II) is the trace.
std::array<double, 16> pauli_expectations(const Eigen::Matrix4cd& rho);
inline std::array<double, 16> pauli_expectations(const DensityMatrix& rho) {
  return pauli_expectations(rho.matrix());
}

struct Sre2 {
  double M2 = 0.0;        // -log2( 1/4 sum_P Tr(P rho)^4 )
  double S2 = 0.0;        // -log2 Tr rho^2
  double M2_tilde = 0.0;  // M2 - S2
};

Sre2 sre2(const DensityMatrix& rho);
double sre2_M2(const Eigen::Matrix4cd& rho);

// -log2[1 - 4(PA + PB)] + log2[1 - 2(PA + PB)]; throws std::domain_error when
// PA + PB >= 1/4.
double sre2_perturbative(const CorrelatorSet& corr);

double purity(const DensityMatrix& rho);

// Tr(B0 rho), B0 = XX + XZ - ZX + ZZ
double bell_expectation(const DensityMatrix& rho);

// Second-order Tr(B0 rho) for the |00> and |Phi+> preparations:
//   |00>:   1 - 2 PA - 2 PB + 2 Re(M + XAB)
//   |Phi+>: 2 - 3/2 (PA + PB + QA + QB) + 2 Re(M + N) - (M' + M'') + Re(C + C')
// Throws std::invalid_argument for any other initial state.
double bell_perturbative(const CorrelatorSet& corr, InitialKind initial);

// Largest Tr(B rho) over B = A1 (B1 + B2) + A2 (B1 - B2) with A_k, B_k signed
// Paulis from {X, Y, Z}; with distinct_settings, A1 != A2 and B1 != B2.
double pauli_bell_max(const DensityMatrix& rho, bool distinct_settings = true);

// Tr(B0 psi_x) for psi_x = sqrt(x)|00> + sqrt(1-x)|11>, x in [0, 1].
double schmidt_family_check(double x);

// U = Rz(phi) Ry(theta) Rz(lambda) on each qubit, angles (phi, theta, lambda).
struct LocalUnitary {
  std::array<double, 3> angles_A{};
  std::array<double, 3> angles_B{};

  static Eigen::Matrix2cd su2(const std::array<double, 3>& angles);
  Eigen::Matrix4cd matrix() const;
};

}  // namespace udw
