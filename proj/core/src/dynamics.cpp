#include "udw/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace udw {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kNegativeTol = 1e-8;
constexpr double kCauchySchwarzSlack = 1e-3;

double min_eig(const Matrix4& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Matrix4 hermitize(const Matrix4& m) { return 0.5 * (m + m.adjoint()); }

void check_correlators(const CorrelatorSet& c) {
  const double pa = c.PA();
  const double pb = c.PB();
  if (!std::isfinite(pa) || !std::isfinite(pb) || !c.gram.allFinite() || !c.pair.allFinite())
    throw CorrelatorError("correlators contain non-finite entries");
  const double scale = std::max(pa, pb);
  if (pa < -1e-12 * (1.0 + scale) || pb < -1e-12 * (1.0 + scale))
    throw CorrelatorError("negative excitation probability");
  if (std::norm(c.XAB()) > pa * pb * (1.0 + kCauchySchwarzSlack) + 1e-300)
    throw CorrelatorError("|XAB|^2 > PA PB: Cauchy-Schwarz violated, quadrature unreliable");
}

// Single-qubit operators embedded for detector A (left) or B (right).
Matrix4 embed(const Eigen::Matrix2cd& op, bool on_a) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd& l = on_a ? op : id;
  const Eigen::Matrix2cd& r = on_a ? id : op;
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 2; ++m) out(2 * i + k, 2 * j + m) = l(i, j) * r(k, m);
  return out;
}

Eigen::Matrix2cd raising() {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  s(1, 0) = 1.0;
  return s;
}

DensityMatrix finish(const Matrix4& rho, PositivityMode mode) {
  DensityMatrix out(hermitize(rho), true);
  if (mode == PositivityMode::Clip && out.min_eigenvalue() < 0.0) return out.clip();
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix() : rho_(Matrix4::Zero()) { rho_(0, 0) = 1.0; }

DensityMatrix::DensityMatrix(const Matrix4& rho, bool allow_negative) : rho_(rho) {
  if (!rho.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kTraceTol)
    throw std::invalid_argument("density matrix trace differs from 1");
  rho_ = hermitize(rho);
  min_eigenvalue_ = min_eig(rho_);
  if (!allow_negative && min_eigenvalue_ < -kNegativeTol)
    throw std::invalid_argument("density matrix has a negative eigenvalue " +
                                std::to_string(min_eigenvalue_));
}

DensityMatrix DensityMatrix::pure(const Vector4& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw std::invalid_argument("zero state vector");
  const Vector4 v = psi / n;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::clip() const {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(rho_);
  Eigen::Vector4d ev = es.eigenvalues();
  double removed = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (ev(k) < 0.0) {
      removed -= ev(k);
      ev(k) = 0.0;
    }
  }
  const Matrix4 v = es.eigenvectors();
  Matrix4 m = v * ev.cast<cd>().asDiagonal() * v.adjoint();
  m /= m.trace().real();
  DensityMatrix out(hermitize(m), true);
  out.clipped_ = removed > 0.0;
  out.clipped_weight_ = removed;
  return out;
}

std::string_view to_string(InitialKind k) {
  switch (k) {
    case InitialKind::ZeroZero: return "00";
    case InitialKind::BellPhiPlus: return "bell";
    case InitialKind::ZeroT: return "0T";
    case InitialKind::Custom: return "custom";
  }
  return "unknown";
}

InitialKind parse_initial(std::string_view name) {
  if (name == "00") return InitialKind::ZeroZero;
  if (name == "bell") return InitialKind::BellPhiPlus;
  if (name == "0T") return InitialKind::ZeroT;
  throw std::invalid_argument("unknown initial state '" + std::string(name) + "'");
}

Vector4 zero_t_vector() {
  Vector4 v = Vector4::Zero();
  v(0) = 1.0 / std::numbers::sqrt2;
  v(1) = std::polar(1.0 / std::numbers::sqrt2, std::numbers::pi / 4.0);
  return v;
}

Vector4 bell_phi_plus_vector() {
  Vector4 v = Vector4::Zero();
  v(0) = 1.0 / std::numbers::sqrt2;
  v(3) = 1.0 / std::numbers::sqrt2;
  return v;
}

DensityMatrix InitialState::density() const {
  switch (kind) {
    case InitialKind::ZeroZero: return DensityMatrix();
    case InitialKind::BellPhiPlus: return DensityMatrix::pure(bell_phi_plus_vector());
    case InitialKind::ZeroT: return DensityMatrix::pure(zero_t_vector());
    case InitialKind::Custom: return custom;
  }
  return DensityMatrix();
}

DensityMatrix cptp_generic(const DensityMatrix& rho0, const CorrelatorSet& corr) {
  if (!corr.gram.allFinite() || !corr.pair.allFinite())
    throw CorrelatorError("correlator set is incomplete or non-finite");
  const Matrix4& rho = rho0.matrix();
  const Eigen::Matrix2cd sp = raising();
  const Eigen::Matrix2cd sm = sp.adjoint();
  const std::array<Matrix4, 4> S{embed(sp, true), embed(sm, true), embed(sp, false),
                                 embed(sm, false)};
  Matrix4 out = rho;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) out += corr.gram(l, k) * S[k] * rho * S[l].adjoint();

  Eigen::Matrix2cd ground = Eigen::Matrix2cd::Zero();
  ground(0, 0) = 1.0;
  Eigen::Matrix2cd excited = Eigen::Matrix2cd::Zero();
  excited(1, 1) = 1.0;
  const std::array<double, 2> p{corr.PA(), corr.PB()};
  const std::array<double, 2> q{corr.QA(), corr.QB()};
  for (int i = 0; i < 2; ++i) {
    const Matrix4 g = embed(ground, i == 0);
    const Matrix4 e = embed(excited, i == 0);
    out -= 0.5 * p[i] * (g * rho + rho * g);
    out -= 0.5 * q[i] * (e * rho + rho * e);
  }
  const std::array<Matrix4, 2> sa{S[0], S[1]};
  const std::array<Matrix4, 2> sb{S[2], S[3]};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Matrix4 t = corr.pair(a, b) * sa[a] * sb[b] * rho;
      out -= t + t.adjoint();
    }
  }
  out = hermitize(out);
  out /= out.trace().real();
  return DensityMatrix(out, true);
}

DensityMatrix final_state_00(const CorrelatorSet& corr) {
  check_correlators(corr);
  const double pa = corr.PA();
  const double pb = corr.PB();
  const double r44 = corr.rho44();
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1.0 - pa - pb - r44;
  m(1, 1) = pb;
  m(2, 2) = pa;
  m(3, 3) = r44;
  m(0, 3) = corr.M();
  m(3, 0) = std::conj(corr.M());
  m(1, 2) = corr.XAB();
  m(2, 1) = std::conj(corr.XAB());
  return DensityMatrix(m, true);
}

DensityMatrix final_state_bell(const CorrelatorSet& c, PositivityMode mode) {
  check_correlators(c);
  const double pa = c.PA();
  const double pb = c.PB();
  const double qa = c.QA();
  const double qb = c.QB();
  const cd M = c.M();
  const cd N = c.N();
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 0.5 * (1.0 - pa - pb + 2.0 * N.real());
  m(1, 1) = 0.5 * (qa + pb + 2.0 * c.Mpp());
  m(2, 2) = 0.5 * (pa + qb + 2.0 * c.Mp());
  m(3, 3) = 0.5 * (1.0 - qa - qb + 2.0 * M.real());
  m(0, 3) = 0.5 * (1.0 - 0.5 * (pa + pb + qa + qb) + M + std::conj(N));
  m(1, 2) = 0.5 * (c.Cc() + c.Cp());
  m(3, 0) = std::conj(m(0, 3));
  m(2, 1) = std::conj(m(1, 2));
  // the diagonal sums to 1 + Re(M + N) + Mp + Mpp, which vanishes up to quadrature error
  m /= m.trace().real();
  return finish(m, mode);
}

DensityMatrix final_state_0T(const CorrelatorSet& c, PositivityMode mode) {
  check_correlators(c);
  const double pa = c.PA();
  const double pb = c.PB();
  const double qb = c.QB();
  const cd w = std::polar(1.0, std::numbers::pi / 4.0);
  const cd wc = std::conj(w);
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 0.5 * (1.0 - pa - pb + qb);
  m(0, 1) = 0.5 * wc * (1.0 - pa - 0.5 * (pb + qb) + cd(0.0, 1.0) * c.GBB());
  m(0, 2) = 0.5 * (w * c.YAB() + wc * c.K());
  m(0, 3) = 0.5 * (c.YAB() + c.M());
  m(1, 1) = 0.5 * (1.0 - pa + pb - qb);
  m(1, 2) = 0.5 * (c.XAB() + c.K());
  m(1, 3) = 0.5 * (wc * c.XAB() + w * c.M());
  m(2, 2) = 0.5 * pa;
  m(2, 3) = 0.5 * wc * pa;
  m(3, 3) = 0.5 * pa;
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < r; ++col) m(r, col) = std::conj(m(col, r));
  return finish(m, mode);
}

DensityMatrix final_state(const InitialState& init, const CorrelatorSet& corr,
                          PositivityMode mode) {
  switch (init.kind) {
    case InitialKind::ZeroZero: return final_state_00(corr);
    case InitialKind::BellPhiPlus: return final_state_bell(corr, mode);
    case InitialKind::ZeroT: return final_state_0T(corr, mode);
    case InitialKind::Custom: {
      const DensityMatrix out = cptp_generic(init.custom, corr);
      return mode == PositivityMode::Clip && out.min_eigenvalue() < 0.0 ? out.clip() : out;
    }
  }
  return final_state_00(corr);
}

}  // namespace udw
