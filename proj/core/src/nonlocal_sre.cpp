#include "udw/nonlocal_sre.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace udw {

void NonlocalOptions::validate() const {
  if (starts < 1) throw std::invalid_argument("nonlocal SRE needs at least one start");
  if (!(simplex_tol > 0.0)) throw std::invalid_argument("simplex tolerance must be > 0");
  if (max_evaluations < 10) throw std::invalid_argument("too few evaluations per start");
  if (!(initial_step > 0.0)) throw std::invalid_argument("initial simplex step must be > 0");
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, double step, double tol, int max_evaluations) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t k = 0; k < n; ++k) pts[k + 1][k] += step;
  std::vector<double> vals(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t k = 0; k <= n; ++k) vals[k] = eval(pts[k]);
  std::vector<std::size_t> order(n + 1);

  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t c = 0; c < n; ++c) d = std::max(d, std::abs(pts[k][c] - pts[0][c]));
    return d;
  };

  bool converged = false;
  while (evals < max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    {
      std::vector<std::vector<double>> p2(n + 1);
      std::vector<double> v2(n + 1);
      for (std::size_t k = 0; k <= n; ++k) {
        p2[k] = pts[order[k]];
        v2[k] = vals[order[k]];
      }
      pts.swap(p2);
      vals.swap(v2);
    }
    if (diameter() < tol) {
      converged = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) centroid[c] += pts[k][c] / static_cast<double>(n);
    auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t c = 0; c < n; ++c) x[c] = centroid[c] + t * (pts[n][c] - centroid[c]);
      return x;
    };
    const std::vector<double> xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < vals[0]) {
      const std::vector<double> xe = along(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
      continue;
    }
    if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
      continue;
    }
    const bool outside = fr < vals[n];
    const std::vector<double> xc = along(outside ? -0.5 : 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[n])) {
      pts[n] = xc;
      vals[n] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t c = 0; c < n; ++c) pts[k][c] = pts[0][c] + 0.5 * (pts[k][c] - pts[0][c]);
      vals[k] = eval(pts[k]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  return {pts[best], vals[best], converged, evals};
}

NonlocalSre nonlocal_sre(const DensityMatrix& rho, const NonlocalOptions& opt) {
  opt.validate();
  const Eigen::Matrix4cd& r = rho.matrix();
  auto objective = [&](const std::vector<double>& x) {
    LocalUnitary u;
    std::copy(x.begin(), x.begin() + 3, u.angles_A.begin());
    std::copy(x.begin() + 3, x.end(), u.angles_B.begin());
    const Eigen::Matrix4cd m = u.matrix();
    return sre2_M2(m * r * m.adjoint());
  };

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const int lattice = opt.starts / 2;
  SimplexResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int s = 0; s < opt.starts; ++s) {
    std::vector<double> x0(6, 0.0);
    if (s < lattice) {
      // first two angles of each qubit on {0, pi/4}, cycling through the lattice
      for (int b = 0; b < 4; ++b) {
        const double v = ((s >> (b % 4)) & 1) ? 0.25 * std::numbers::pi : 0.0;
        x0[b < 2 ? b : b + 1] = v + 0.5 * std::numbers::pi * (s / 16);
      }
    } else {
      for (double& v : x0) v = angle(rng);
    }
    SimplexResult res = nelder_mead(objective, x0, opt.initial_step, opt.simplex_tol,
                                    opt.max_evaluations);
    if (res.value < best.value) best = std::move(res);
  }
  NonlocalSre out;
  out.M2_NL = std::max(best.value, 0.0);
  std::copy(best.x.begin(), best.x.begin() + 3, out.minimizer.angles_A.begin());
  std::copy(best.x.begin() + 3, best.x.end(), out.minimizer.angles_B.begin());
  out.converged = best.converged;
  out.M2_tilde_NL = out.M2_NL + std::log2(purity(rho));
  return out;
}

}  // namespace udw
