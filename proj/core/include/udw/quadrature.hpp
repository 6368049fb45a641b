#pragma once

#include <complex>
#include <span>
#include <vector>

namespace udw {

// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  auto integrate(F&& f, double lo, double hi) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    decltype(f(mid)) sum{};
    for (std::size_t k = 0; k < nodes_.size(); ++k) sum += weights_[k] * f(mid + half * nodes_[k]);
    return sum * half;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// 31-point Kronrod extension of the 15-point Gauss rule on [-1, 1]. Both
// share the Gauss nodes, so one pass yields a value and an error estimate.
class GaussKronrod31 {
 public:
  GaussKronrod31();

  static constexpr int size() { return 31; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& kronrod_weights() const { return kronrod_; }
  // zero on the nodes that belong only to the Kronrod extension
  const std::vector<double>& gauss_weights() const { return gauss_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> kronrod_;
  std::vector<double> gauss_;
};

// A near-singular point of an integrand on the real line: panels are graded
// geometrically (ratio 2) away from `center`, starting at half-width `scale`.
struct Feature {
  double center = 0.0;
  double scale = 0.0;
};

// Sorted panel boundaries on [lo, hi] containing lo, hi, every extra knot inside
// the interval, the graded sequences of each feature, and enough uniform knots
// that no panel is wider than max_width.
std::vector<double> graded_knots(double lo, double hi, std::span<const Feature> features,
                                 std::span<const double> extra_knots, double max_width);

// Polynomial extrapolation of samples (h_k, v_k) to h = 0 by Neville's scheme.
// Uses the last `order + 1` samples (the smallest h when h is decreasing).
std::complex<double> extrapolate_to_zero(std::span<const double> h,
                                         std::span<const std::complex<double>> v, int order);

}  // namespace udw
