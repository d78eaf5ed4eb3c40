#pragma once

#include <functional>

namespace greedyopt {

struct ScalarSolve {
  double argmin = 0.0;
  double min_value = 0.0;
  int evals = 0;
  bool converged = true;
};

using ScalarFn = std::function<double(double)>;

// Minimizes a convex f over [lo, inf). Brackets by doubling the step from
// hi_hint until f increases (cap max_doublings, exceeding it throws:
// an unbounded-below direction is fatal for the bounded-sublevel targets
// handled here), then golden-section to interval width <= tol, and returns
// the best point seen. When the derivative df is supplied the final bracket
// is polished by bisection on the (monotone) derivative sign change, giving
// near-machine argmin precision; df(lo) >= 0 short-circuits to exactly lo.
// Throws on non-finite f values.
ScalarSolve minimize_scalar(const ScalarFn& f, double lo, double hi_hint,
                            double tol, const ScalarFn& df = nullptr,
                            int max_doublings = 60);

// Same contract with the variable free over all of R: brackets by walking
// downhill from x0 in whichever direction descends.
ScalarSolve minimize_free(const ScalarFn& f, double x0, double step_hint,
                          double tol, const ScalarFn& df = nullptr,
                          int max_doublings = 60);

// Same contract on a fixed interval [lo, hi].
ScalarSolve minimize_bounded(const ScalarFn& f, double lo, double hi,
                             double tol, const ScalarFn& df = nullptr);

}  // namespace greedyopt
