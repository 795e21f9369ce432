#pragma once

#include <functional>

#include "inscribed/geometry.hpp"

namespace insc {

struct NmResult {
  Vec x;
  double value = 0.0;
  int evals = 0;
};

// Derivative-free minimization (Nelder-Mead) of f starting at x0 with the
// given initial simplex step.  Stops when the simplex value spread falls
// below ftol or max_eval evaluations are spent.
NmResult nelder_mead(const std::function<double(const Vec&)>& f, const Vec& x0,
                     double step, int max_eval = 2000, double ftol = 1e-13);

// 1-D maximization by golden-section search on [lo, hi] (f unimodal there).
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-12);

}  // namespace insc
