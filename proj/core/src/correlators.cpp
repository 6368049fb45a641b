#include "udw/correlators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include <boost/math/tools/roots.hpp>

#include "udw/quadrature.hpp"
#include "udw/special_functions.hpp"

namespace udw {

namespace {

constexpr double kInvFourPiSq = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
constexpr int kMaxBisection = 10;

int sign_index(Sign s) { return s == Sign::Plus ? 0 : 1; }

// Four phase combinations, index s1 * 2 + s2 with 0 = '+', 1 = '-'.
using Sums = std::array<cd, 4>;

struct Estimate {
  Sums value{};
  std::array<double, 4> error{};  // absolute

  void add(const Estimate& o) {
    for (int k = 0; k < 4; ++k) {
      value[k] += o.value[k];
      error[k] += o.error[k];
    }
  }
};

const GaussKronrod31& kronrod() {
  static const GaussKronrod31 rule;
  return rule;
}

// One Kronrod panel of fn: value from the 31-point rule, error from its
// difference with the embedded Gauss rule plus the propagated error of fn.
template <class Fn>
Estimate kronrod_panel(Fn& fn, double a, double b) {
  const GaussKronrod31& rule = kronrod();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Sums gauss{};
  Estimate out;
  for (int n = 0; n < GaussKronrod31::size(); ++n) {
    const Estimate f = fn(mid + half * rule.nodes()[n]);
    const double wk = half * rule.kronrod_weights()[n];
    const double wg = half * rule.gauss_weights()[n];
    for (int k = 0; k < 4; ++k) {
      out.value[k] += wk * f.value[k];
      gauss[k] += wg * f.value[k];
      out.error[k] += wk * f.error[k];
    }
  }
  for (int k = 0; k < 4; ++k) out.error[k] += std::abs(out.value[k] - gauss[k]);
  return out;
}

// Adaptive integration over the panels between consecutive knots. A panel is
// bisected while its error exceeds its share of rel_tol * |total| per component.
template <class Fn>
Estimate adaptive(Fn& fn, const std::vector<double>& knots, double rel_tol, double abs_tol) {
  std::vector<Estimate> panels;
  Estimate total;
  for (std::size_t p = 0; p + 1 < knots.size(); ++p) {
    panels.push_back(kronrod_panel(fn, knots[p], knots[p + 1]));
    total.add(panels.back());
  }
  std::array<double, 4> tol{};
  for (int k = 0; k < 4; ++k) tol[k] = 0.1 * rel_tol * std::abs(total.value[k]) + abs_tol;
  const double span = knots.back() - knots.front();

  auto accept = [&](const Estimate& e, double width) {
    const double share = std::max(width / span, 1e-3);
    for (int k = 0; k < 4; ++k) {
      if (e.error[k] > tol[k] * share) return false;
    }
    return true;
  };
  Estimate out;
  auto refine = [&](auto&& self, double a, double b, const Estimate& whole, int depth) -> void {
    if (depth >= kMaxBisection || accept(whole, b - a)) {
      out.add(whole);
      return;
    }
    const double m = 0.5 * (a + b);
    self(self, a, m, kronrod_panel(fn, a, m), depth + 1);
    self(self, m, b, kronrod_panel(fn, m, b), depth + 1);
  };
  for (std::size_t p = 0; p + 1 < knots.size(); ++p) refine(refine, knots[p], knots[p + 1], panels[p], 0);
  return out;
}

std::vector<double> uniform_knots(double lo, double hi, int panels) {
  std::vector<double> knots(panels + 1);
  for (int p = 0; p <= panels; ++p) knots[p] = lo + (hi - lo) * p / panels;
  return knots;
}

struct PassSetup {
  Scenario scenario;
  Detector i;
  Detector j;
  TrajectoryParams tparams;
  double omega;
  double sigma;
  double window;     // absolute half-width
  double max_width;  // widest inner panel
  int outer_panels;
  double rel_tol;
  double abs_tol;
};

PassSetup make_setup(Scenario scenario, Detector i, Detector j, const TrajectoryParams& tparams,
                     const DetectorParams& dparams, const QuadratureConfig& qcfg) {
  PassSetup s{scenario, i, j, tparams, dparams.omega, dparams.sigma, qcfg.window * dparams.sigma,
              0.0, 0, qcfg.rel_tol, qcfg.abs_tol};
  double width = 2.0 * dparams.sigma;
  if (dparams.omega > 0.0) width = std::min(width, 4.0 / dparams.omega);
  const double a = scenario == Scenario::Inertial ? 0.0 : tparams.a;
  if (a > 0.0) width = std::min(width, 4.0 / a);
  s.max_width = width;
  const int needed = static_cast<int>(std::ceil(2.0 * s.window / width));
  s.outer_panels = std::max(qcfg.base_panels, needed);
  return s;
}

double envelope(const PassSetup& s, double tau) {
  const double r = tau / s.sigma;
  return std::exp(-0.5 * r * r);
}

// Same-detector terms. The self-interval depends on s = tau - tau' only, so
// the integral over the mean time is Gaussian:
//   J(s1, s2) = sigma sqrt(pi) e^{-sigma^2 Omega^2 (s1 + s2)^2 / 4}
//               int ds e^{-s^2 / 4 sigma^2} e^{i Omega (s1 - s2) s / 2} W(s).
Estimate self_pass(const PassSetup& s, double eps) {
  const double reach = 2.0 * s.window;
  const Feature pole{0.0, 0.5 * eps};
  const std::vector<double> knots =
      graded_knots(-reach, reach, std::span<const Feature>(&pole, 1), {}, s.max_width);
  auto fn = [&](double x) {
    const double r = x / (2.0 * s.sigma);
    const cd w = -kInvFourPiSq * std::exp(-r * r) /
                 complex_interval(s.scenario, s.i, s.i, s.tparams, x, 0.0, eps);
    const cd ph = std::polar(1.0, s.omega * x);
    Estimate e;
    e.value = {w, w * ph, w * std::conj(ph), w};
    return e;
  };
  Estimate out = adaptive(fn, knots, s.rel_tol, s.abs_tol);
  const double pref = s.sigma * std::sqrt(std::numbers::pi);
  const double same = std::exp(-s.sigma * s.sigma * s.omega * s.omega);
  for (int k = 0; k < 4; ++k) {
    const double f = pref * ((k == 0 || k == 3) ? same : 1.0);
    out.value[k] *= f;
    out.error[k] *= f;
  }
  return out;
}

using RootCache = std::unordered_map<double, std::vector<double>>;

// Cross-detector terms as an explicit double integral.
class CrossPass {
 public:
  CrossPass(const PassSetup& setup, RootCache& cache) : s_(setup), cache_(cache) {}

  Estimate run(double eps) {
    auto fn = [&](double tau) { return outer_integrand(tau, eps); };
    return adaptive(fn, uniform_knots(-s_.window, s_.window, s_.outer_panels), s_.rel_tol,
                    s_.abs_tol);
  }

  // W_F = W - theta(t_j - t_i) (i / 2 pi) delta(interval) for massless fields,
  // so the time-ordered amplitude is the Wightman one plus a sum over the
  // future light-cone crossings.
  Estimate light_cone() {
    const cd factor(0.0, -1.0 / (2.0 * std::numbers::pi));
    auto fn = [&](double tau) {
      std::array<cd, 2> sum{};
      for (double r : crossings(tau)) {
        if (r <= tau) continue;
        const cd q = std::polar(envelope(s_, r) / std::abs(slope_at(tau, r)), s_.omega * r);
        sum[0] += factor * q;
        sum[1] += factor * std::conj(q);
      }
      return combine(tau, sum, {});
    };
    return adaptive(fn, uniform_knots(-s_.window, s_.window, s_.outer_panels), s_.rel_tol,
                    s_.abs_tol);
  }

 private:
  Estimate combine(double tau, const std::array<cd, 2>& in, const std::array<double, 2>& err) const {
    const cd ph = std::polar(envelope(s_, tau), s_.omega * tau);
    const std::array<cd, 2> outer{ph, std::conj(ph)};
    const double g = envelope(s_, tau);
    Estimate e;
    for (int s1 = 0; s1 < 2; ++s1) {
      for (int s2 = 0; s2 < 2; ++s2) {
        e.value[s1 * 2 + s2] = outer[s1] * in[s2];
        e.error[s1 * 2 + s2] = g * err[s2];
      }
    }
    return e;
  }

  Estimate outer_integrand(double tau, double eps) {
    std::vector<Feature> features;
    for (double r : crossings(tau)) features.push_back(pole_near(tau, r, eps));
    const std::vector<double> knots =
        graded_knots(-s_.window, s_.window, features, {}, s_.max_width);
    const GaussKronrod31& rule = kronrod();
    std::array<cd, 2> kr{};
    std::array<double, 2> err{};
    for (std::size_t p = 0; p + 1 < knots.size(); ++p) {
      const double half = 0.5 * (knots[p + 1] - knots[p]);
      const double mid = 0.5 * (knots[p + 1] + knots[p]);
      std::array<cd, 2> k_sum{};
      std::array<cd, 2> g_sum{};
      for (int n = 0; n < GaussKronrod31::size(); ++n) {
        const double tp = mid + half * rule.nodes()[n];
        const cd w = -kInvFourPiSq * envelope(s_, tp) /
                     complex_interval(s_.scenario, s_.i, s_.j, s_.tparams, tau, tp, eps);
        const cd ph = std::polar(1.0, s_.omega * tp);
        const std::array<cd, 2> v{w * ph, w * std::conj(ph)};
        for (int q = 0; q < 2; ++q) {
          k_sum[q] += half * rule.kronrod_weights()[n] * v[q];
          g_sum[q] += half * rule.gauss_weights()[n] * v[q];
        }
      }
      for (int q = 0; q < 2; ++q) {
        kr[q] += k_sum[q];
        err[q] += std::abs(k_sum[q] - g_sum[q]);
      }
    }
    return combine(tau, kr, err);
  }

  double interval(double tau, double tau_p) const {
    return separation(s_.scenario, s_.i, s_.j, s_.tparams, tau, tau_p).interval;
  }

  double slope_at(double tau, double root) const {
    const double h = 1e-6 * std::max(1.0, std::abs(root));
    return (interval(tau, root + h) - interval(tau, root - h)) / (2.0 * h);
  }

  // The regulated kernel has a pole next to each real light-cone crossing;
  // one Newton step from the root locates it.
  Feature pole_near(double tau, double root, double eps) const {
    const double slope = slope_at(tau, root);
    if (slope == 0.0) return {root, 0.5 * eps};
    const cd value = complex_interval(s_.scenario, s_.i, s_.j, s_.tparams, tau, root, eps);
    const cd zeta = -value / slope;
    return {root + zeta.real(), 0.5 * std::max(std::abs(zeta.imag()), 1e-3 * eps)};
  }

  // Real roots of the interval in tau' on the window widened by one sigma.
  const std::vector<double>& crossings(double tau) {
    auto it = cache_.find(tau);
    if (it != cache_.end()) return it->second;
    std::vector<double> found;
    const double lo = -s_.window - s_.sigma;
    const double hi = s_.window + s_.sigma;
    constexpr int kScan = 192;
    const double step = (hi - lo) / kScan;
    double prev_x = lo;
    double prev_f = interval(tau, lo);
    for (int k = 1; k <= kScan; ++k) {
      const double xk = lo + k * step;
      const double fk = interval(tau, xk);
      if (prev_f == 0.0) {
        found.push_back(prev_x);
      } else if ((prev_f < 0.0) != (fk < 0.0) && fk != 0.0) {
        auto fn = [&](double t) { return interval(tau, t); };
        boost::uintmax_t iters = 80;
        auto tol = boost::math::tools::eps_tolerance<double>(52);
        const auto br = boost::math::tools::toms748_solve(fn, prev_x, xk, prev_f, fk, tol, iters);
        found.push_back(0.5 * (br.first + br.second));
      }
      prev_x = xk;
      prev_f = fk;
    }
    return cache_.emplace(tau, std::move(found)).first->second;
  }

  PassSetup s_;
  RootCache& cache_;
};

struct PairResult {
  Sums wightman{};  // extrapolated to eps = 0
  Sums ordered{};
  double error = 0.0;  // relative
  bool converged = true;
};

void record(PairResult& result, const Estimate& e, double rel_tol, double abs_tol) {
  for (int k = 0; k < 4; ++k) {
    const double scale = std::abs(e.value[k]);
    result.error = std::max(result.error, e.error[k] / std::max(scale, abs_tol));
    if (e.error[k] > rel_tol * scale + abs_tol) result.converged = false;
  }
}

PairResult integrate_pair(Scenario scenario, Detector i, Detector j,
                          const TrajectoryParams& tparams, const DetectorParams& dparams,
                          const QuadratureConfig& qcfg) {
  const PassSetup setup = make_setup(scenario, i, j, tparams, dparams, qcfg);
  const std::size_t n_eps = qcfg.eps_schedule.size();
  std::vector<Sums> per_eps(n_eps);
  PairResult result;
  RootCache cache;
  CrossPass cross(setup, cache);
  for (std::size_t e = 0; e < n_eps; ++e) {
    const double eps = qcfg.eps_schedule[e] * dparams.sigma;
    const Estimate est = i == j ? self_pass(setup, eps) : cross.run(eps);
    record(result, est, qcfg.rel_tol, qcfg.abs_tol);
    per_eps[e] = est.value;
  }
  std::vector<double> h(qcfg.eps_schedule.begin(), qcfg.eps_schedule.end());
  std::vector<cd> v(n_eps);
  const int order = std::min<int>(qcfg.extrapolation_order, static_cast<int>(n_eps) - 1);
  for (int k = 0; k < 4; ++k) {
    for (std::size_t e = 0; e < n_eps; ++e) v[e] = per_eps[e][k];
    const cd full = extrapolate_to_zero(h, v, order);
    if (order > 0) {
      const cd lower = extrapolate_to_zero(h, v, order - 1);
      const double diff = std::abs(full - lower);
      result.error = std::max(result.error, diff / std::max(std::abs(full), qcfg.abs_tol));
      if (diff > qcfg.rel_tol * std::abs(full) + qcfg.abs_tol) result.converged = false;
    }
    result.wightman[k] = full;
  }
  if (i != j) {
    const Estimate cone = cross.light_cone();
    record(result, cone, qcfg.rel_tol, qcfg.abs_tol);
    for (int k = 0; k < 4; ++k) result.ordered[k] = result.wightman[k] + cone.value[k];
  }
  return result;
}

}  // namespace

void DetectorParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be > 0");
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be >= 0");
}

void QuadratureConfig::validate() const {
  if (!(window >= 4.0)) throw std::invalid_argument("quadrature window must be >= 4 sigma");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be > 0");
  if (base_panels < 1)
    throw std::invalid_argument("base_panels must be >= 1");
  if (eps_schedule.empty()) throw std::invalid_argument("eps schedule must be nonempty");
  for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
    if (!(eps_schedule[k] > 0.0)) throw std::invalid_argument("eps schedule must be positive");
    if (k > 0 && !(eps_schedule[k] < eps_schedule[k - 1]))
      throw std::invalid_argument("eps schedule must be strictly decreasing");
  }
  if (extrapolation_order < 0) throw std::invalid_argument("extrapolation order must be >= 0");
}

cd wightman_from(double dt, double interval, double eps) {
  // (dt - i eps)^2 - r^2 = interval - eps^2 - 2 i eps dt
  return -kInvFourPiSq / cd(interval - eps * eps, -2.0 * eps * dt);
}

cd wightman(const SpacetimePoint& p, const SpacetimePoint& q, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("Wightman regulator eps must be > 0");
  const double dt = p.t - q.t;
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double dz = p.z - q.z;
  return wightman_from(dt, dt * dt - (dx * dx + dy * dy + dz * dz), eps);
}

DistributionalWightman wightman_inertial_distributional(double dt, double L) {
  if (!(L > 0.0)) throw std::invalid_argument("separation must be > 0");
  const double f = dt * dt - L * L;
  if (f == 0.0) throw std::domain_error("light-cone point: delta support must be integrated separately");
  DistributionalWightman out;
  out.delta_coefficient = dt > 0.0 ? 1.0 : (dt < 0.0 ? -1.0 : 0.0);
  out.pv_part = -kInvFourPiSq / f;
  return out;
}

CorrelatorSet CorrelatorSet::scaled(double factor) const {
  CorrelatorSet out = *this;
  out.gram *= factor;
  out.pair *= factor;
  return out;
}

CorrelatorValue correlator(Detector i, Sign alpha, Detector j, Sign beta, Scenario scenario,
                           const TrajectoryParams& tparams, const DetectorParams& dparams,
                           const QuadratureConfig& qcfg) {
  tparams.validate();
  dparams.validate();
  qcfg.validate();
  const PairResult r = integrate_pair(scenario, i, j, tparams, dparams, qcfg);
  const double l2 = dparams.lambda * dparams.lambda;
  return {l2 * r.wightman[sign_index(alpha) * 2 + sign_index(beta)], r.error, r.converged};
}

CorrelatorSet correlator_set(Scenario scenario, const TrajectoryParams& tparams,
                             const DetectorParams& dparams, const QuadratureConfig& qcfg) {
  tparams.validate();
  dparams.validate();
  qcfg.validate();
  CorrelatorSet out;
  const PairResult aa = integrate_pair(scenario, Detector::A, Detector::A, tparams, dparams, qcfg);
  // the self-interval is the same function of tau - tau' on both worldlines
  const PairResult& bb = aa;
  const PairResult ab = integrate_pair(scenario, Detector::A, Detector::B, tparams, dparams, qcfg);
  // gram(i alpha, j beta) = <E_i^{-alpha}|E_j^{beta}>
  auto entry = [](const PairResult& r, int ai, int bj) { return r.wightman[(1 - ai) * 2 + bj]; };
  const int base_a = kAPlus;
  const int base_b = kBPlus;
  for (int al = 0; al < 2; ++al) {
    for (int be = 0; be < 2; ++be) {
      out.gram(base_a + al, base_a + be) = entry(aa, al, be);
      out.gram(base_b + al, base_b + be) = entry(bb, al, be);
      out.gram(base_a + al, base_b + be) = entry(ab, al, be);
      out.pair(al, be) = ab.ordered[al * 2 + be];
    }
  }
  // the B-A block follows from Hermiticity
  out.gram.block<2, 2>(base_b, base_a) = out.gram.block<2, 2>(base_a, base_b).adjoint();
  // diagonal blocks are Hermitian up to quadrature error; symmetrize
  out.gram = 0.5 * (out.gram + out.gram.adjoint()).eval();
  out.error_estimate = std::max({aa.error, bb.error, ab.error});
  out.converged = aa.converged && bb.converged && ab.converged;
  const double l2 = dparams.lambda * dparams.lambda;
  return out.scaled(l2);
}

InertialClosedForms inertial_closed_forms(const DetectorParams& dparams, double L) {
  dparams.validate();
  if (!(L > 0.0)) throw std::invalid_argument("separation must be > 0");
  const double s = dparams.sigma;
  const double w = dparams.omega;
  const double l2 = dparams.lambda * dparams.lambda;
  const double sw = s * w;
  InertialClosedForms out;
  out.E2 = l2 / (4.0 * std::numbers::pi) *
           (std::exp(-sw * sw) - std::sqrt(std::numbers::pi) * sw * std::erfc(sw));
  // erf(i y) = i erfi(y); e^{-y^2} erfi(y) = 2 F(y) / sqrt(pi)
  const double y = L / (2.0 * s);
  const double pref = l2 * s / (4.0 * std::sqrt(std::numbers::pi) * L) * std::exp(-sw * sw);
  const cd bracket = cd(-std::exp(-y * y), 2.0 / std::sqrt(std::numbers::pi) * dawson(y));
  out.M = cd(0.0, 1.0) * pref * bracket;
  return out;
}

double inertial_deexcitation(const DetectorParams& dparams) {
  const double sw = dparams.sigma * dparams.omega;
  return dparams.lambda * dparams.lambda / (4.0 * std::numbers::pi) *
         (std::exp(-sw * sw) + std::sqrt(std::numbers::pi) * sw * std::erfc(-sw));
}

}  // namespace udw
