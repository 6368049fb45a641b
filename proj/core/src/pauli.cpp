#include "udw/pauli.hpp"

namespace udw {

namespace {

using cd = std::complex<double>;

std::array<Eigen::Matrix2cd, 4> make_single() {
  std::array<Eigen::Matrix2cd, 4> p;
  p[0] = Eigen::Matrix2cd::Identity();
  p[1] << 0.0, 1.0, 1.0, 0.0;
  p[2] << 0.0, cd(0.0, -1.0), cd(0.0, 1.0), 0.0;
  p[3] << 1.0, 0.0, 0.0, -1.0;
  return p;
}

}  // namespace

const Eigen::Matrix2cd& pauli_matrix(Pauli p) {
  static const std::array<Eigen::Matrix2cd, 4> single = make_single();
  return single[static_cast<int>(p)];
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Matrix4cd PauliString2::matrix() const { return kron(pauli_matrix(left), pauli_matrix(right)); }

std::string PauliString2::label() const {
  static constexpr char names[] = "IXYZ";
  return {names[static_cast<int>(left)], names[static_cast<int>(right)]};
}

const std::array<PauliString2, 16>& pauli_strings() {
  static const std::array<PauliString2, 16> all = [] {
    std::array<PauliString2, 16> out;
    for (int k = 0; k < 16; ++k) out[k] = {static_cast<Pauli>(k / 4), static_cast<Pauli>(k % 4)};
    return out;
  }();
  return all;
}

const std::array<Eigen::Matrix4cd, 16>& pauli_string_matrices() {
  static const std::array<Eigen::Matrix4cd, 16> all = [] {
    std::array<Eigen::Matrix4cd, 16> out;
    for (int k = 0; k < 16; ++k) out[k] = pauli_strings()[k].matrix();
    return out;
  }();
  return all;
}

}  // namespace udw
