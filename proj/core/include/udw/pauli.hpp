#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

namespace udw {

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

const Eigen::Matrix2cd& pauli_matrix(Pauli p);

struct PauliString2 {
  Pauli left = Pauli::I;   // acts on A
  Pauli right = Pauli::I;  // acts on B

  Eigen::Matrix4cd matrix() const;
  std::string label() const;  // e.g. "XZ"
  // position in the 4 * left + right enumeration
  int index() const { return 4 * static_cast<int>(left) + static_cast<int>(right); }
};

// All 16 strings, II first, in the 4 * left + right order.
const std::array<PauliString2, 16>& pauli_strings();
const std::array<Eigen::Matrix4cd, 16>& pauli_string_matrices();

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

}  // namespace udw
