#pragma once

#include <cstdint>
#include <functional>

#include "udw/dynamics.hpp"
#include "udw/resources.hpp"

namespace udw {

struct NonlocalOptions {
  int starts = 32;            // first half on a lattice, the rest random
  std::uint64_t seed = 0;
  double simplex_tol = 1e-8;  // stop when the simplex diameter is below this
  int max_evaluations = 6000;  // per start
  double initial_step = 0.6;   // radians

  void validate() const;
};

struct NonlocalSre {
  double M2_NL = 0.0;        // min over local unitaries of M2
  double M2_tilde_NL = 0.0;  // the same minimum minus the invariant S2
  LocalUnitary minimizer;
  bool converged = false;    // best start met simplex_tol
};

NonlocalSre nonlocal_sre(const DensityMatrix& rho, const NonlocalOptions& opt = {});

// Nelder-Mead on R^n. Returns the best point; `converged` reports whether the
// simplex diameter fell below tol within max_evaluations.
struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  int evaluations = 0;
};
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, double step, double tol, int max_evaluations);

}  // namespace udw
