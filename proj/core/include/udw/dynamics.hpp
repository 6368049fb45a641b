#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "udw/correlators.hpp"

namespace udw {

// Basis {|00>, |01>, |10>, |11>}, detector A is the left factor.
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

enum class PositivityMode { Raw, Clip };

class DensityMatrix {
 public:
  DensityMatrix();  // |00><00|
  // Validates Hermiticity (1e-12), unit trace (1e-10) and, unless
  // allow_negative is set, eigenvalues >= -1e-8. Throws std::invalid_argument.
  explicit DensityMatrix(const Matrix4& rho, bool allow_negative = false);

  static DensityMatrix pure(const Vector4& psi);

  const Matrix4& matrix() const { return rho_; }
  cd operator()(int r, int c) const { return rho_(r, c); }
  double min_eigenvalue() const { return min_eigenvalue_; }

  // Set when negative eigenvalues were projected out.
  bool clipped() const { return clipped_; }
  double clipped_weight() const { return clipped_weight_; }

  // Zeroes negative eigenvalues and renormalizes the trace.
  DensityMatrix clip() const;

 private:
  Matrix4 rho_;
  double min_eigenvalue_ = 0.0;
  bool clipped_ = false;
  double clipped_weight_ = 0.0;
};

enum class InitialKind { ZeroZero, BellPhiPlus, ZeroT, Custom };

std::string_view to_string(InitialKind k);
// "00", "bell", "0T"
InitialKind parse_initial(std::string_view name);

struct InitialState {
  InitialKind kind = InitialKind::ZeroZero;
  DensityMatrix custom;  // used only for Custom

  DensityMatrix density() const;
};

// |T> = (|0> + e^{i pi/4} |1>) / sqrt(2)
Vector4 zero_t_vector();
Vector4 bell_phi_plus_vector();

class CorrelatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// rho -> rho + sum gram(l, k) S_k rho S_l^dagger
//            - 1/2 sum_i (P_i {|0><0|_i, rho} + Q_i {|1><1|_i, rho})
//            - sum_{ab} (pair(a, b) s_A^a s_B^b rho + h.c.)
// with S = (s_A^+, s_A^-, s_B^+, s_B^-), s^+ = |1><0|. Level shifts are
// dropped. The result is Hermitized and trace-normalized.
DensityMatrix cptp_generic(const DensityMatrix& rho0, const CorrelatorSet& corr);

DensityMatrix final_state_00(const CorrelatorSet& corr);
DensityMatrix final_state_bell(const CorrelatorSet& corr,
                               PositivityMode mode = PositivityMode::Clip);
DensityMatrix final_state_0T(const CorrelatorSet& corr, PositivityMode mode = PositivityMode::Clip);

// Dispatches on the initial state; Custom goes through cptp_generic.
DensityMatrix final_state(const InitialState& init, const CorrelatorSet& corr,
                          PositivityMode mode = PositivityMode::Clip);

}  // namespace udw
