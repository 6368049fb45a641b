#include "udw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace udw {

GaussLegendre::GaussLegendre(int n) : nodes_(n), weights_(n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

GaussKronrod31::GaussKronrod31() {
  using rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  const auto& x = rule::abscissa();
  const auto& wk = rule::weights();
  const GaussLegendre gauss(15);
  auto gauss_weight = [&](double node) {
    for (int k = 0; k < gauss.size(); ++k) {
      if (std::abs(gauss.nodes()[k] - node) < 1e-12) return gauss.weights()[k];
    }
    return 0.0;
  };
  for (std::size_t k = x.size(); k-- > 1;) {
    nodes_.push_back(-x[k]);
    kronrod_.push_back(wk[k]);
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    nodes_.push_back(x[k]);
    kronrod_.push_back(wk[k]);
  }
  for (double node : nodes_) gauss_.push_back(gauss_weight(node));
}

std::vector<double> graded_knots(double lo, double hi, std::span<const Feature> features,
                                 std::span<const double> extra_knots, double max_width) {
  std::vector<double> knots{lo, hi};
  for (double k : extra_knots) {
    if (k > lo && k < hi) knots.push_back(k);
  }
  const double span = hi - lo;
  for (const Feature& f : features) {
    if (!(f.scale > 0.0)) continue;
    if (f.center > lo && f.center < hi) knots.push_back(f.center);
    // offsets grow until they cover the whole interval from the center
    const double reach = std::max(std::abs(f.center - lo), std::abs(hi - f.center));
    for (double d = f.scale; d < reach; d *= 2.0) {
      const double left = f.center - d;
      const double right = f.center + d;
      if (left > lo && left < hi) knots.push_back(left);
      if (right > lo && right < hi) knots.push_back(right);
      if (d > 2.0 * span) break;
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [span](double x, double y) { return std::abs(x - y) <= 1e-15 * span; }),
              knots.end());
  if (max_width > 0.0) {
    std::vector<double> out;
    out.reserve(knots.size() * 2);
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      const double a = knots[k];
      const double b = knots[k + 1];
      out.push_back(a);
      const int pieces = static_cast<int>(std::ceil((b - a) / max_width));
      for (int p = 1; p < pieces; ++p) out.push_back(a + (b - a) * p / pieces);
    }
    out.push_back(knots.back());
    return out;
  }
  return knots;
}

std::complex<double> extrapolate_to_zero(std::span<const double> h,
                                         std::span<const std::complex<double>> v, int order) {
  if (h.size() != v.size() || h.empty()) throw std::invalid_argument("extrapolation needs matching samples");
  const std::size_t m = std::min<std::size_t>(h.size(), static_cast<std::size_t>(std::max(order, 0)) + 1);
  const std::size_t first = h.size() - m;
  std::vector<std::complex<double>> p(v.begin() + first, v.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t k = 0; k + level < m; ++k) {
      const double hk = h[first + k];
      const double hl = h[first + k + level];
      // Neville step evaluated at x = 0
      p[k] = (hk * p[k + 1] - hl * p[k]) / (hk - hl);
    }
  }
  return p[0];
}

}  // namespace udw
