#include "greedyopt/scalar_min.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace greedyopt {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/phi

struct Tracker {
  const ScalarFn& f;
  int evals = 0;
  double best_x = 0.0;
  double best_f = std::numeric_limits<double>::infinity();

  double operator()(double x) {
    double v = f(x);
    ++evals;
    if (!std::isfinite(v))
      throw std::runtime_error("scalar minimizer: non-finite objective value");
    if (v < best_f) {
      best_f = v;
      best_x = x;
    }
    return v;
  }
};

// Golden-section on [a, b] down to width <= tol.
void golden(Tracker& t, double a, double b, double tol) {
  double c = b - (b - a) * kInvPhi;
  double d = a + (b - a) * kInvPhi;
  double fc = t(c);
  double fd = t(d);
  while (b - a > tol && c < d) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = t(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = t(d);
    }
  }
}

// Bisection on the monotone derivative over [a, b], assuming df(a) < 0 < df(b).
void deriv_bisect(Tracker& t, const ScalarFn& df, double a, double b) {
  for (int i = 0; i < 80; ++i) {
    if (b - a <= 1e-16 * (std::fabs(a) + std::fabs(b) + 1e-300)) break;
    double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    double dm = df(m);
    if (!std::isfinite(dm)) break;
    if (dm < 0.0) {
      a = m;
    } else if (dm > 0.0) {
      b = m;
    } else {
      a = b = m;
      break;
    }
  }
  t(0.5 * (a + b));
}

// Polishes the post-golden neighborhood of the incumbent when the derivative
// sign change straddles it.
void try_polish(Tracker& t, const ScalarFn& df, double a, double b) {
  if (!df || !(b > a)) return;
  double da = df(a);
  double db = df(b);
  if (std::isfinite(da) && std::isfinite(db) && da < 0.0 && db > 0.0) {
    deriv_bisect(t, df, a, b);
  }
}

ScalarSolve refine(Tracker& t, const ScalarFn& df, double a, double b,
                   double tol) {
  golden(t, a, b, tol);
  try_polish(t, df, std::max(a, t.best_x - tol), std::min(b, t.best_x + tol));
  return {t.best_x, t.best_f, t.evals, true};
}

}  // namespace

ScalarSolve minimize_scalar(const ScalarFn& f, double lo, double hi_hint,
                            double tol, const ScalarFn& df, int max_doublings) {
  if (!(tol > 0.0)) throw std::invalid_argument("minimize_scalar: tol must be > 0");
  Tracker t{f};
  double f_lo = t(lo);

  if (df) {
    double dlo = df(lo);
    if (std::isfinite(dlo) && dlo >= 0.0) {
      // Convexity: f is nondecreasing from lo onward, the boundary wins.
      return {lo, f_lo, t.evals, true};
    }
  }

  double step = hi_hint > lo ? hi_hint - lo : 1.0;
  double x_prev2 = lo;
  double x_prev = lo + step;
  double f_prev = t(x_prev);
  if (f_prev >= f_lo) {
    return refine(t, df, lo, x_prev, tol);
  }
  int doublings = 0;
  for (;;) {
    if (++doublings > max_doublings)
      throw std::runtime_error(
          "minimize_scalar: bracket cap exceeded (direction appears unbounded below)");
    step *= 2.0;
    double x_next = x_prev + step;
    double f_next = t(x_next);
    if (f_next >= f_prev) {
      return refine(t, df, x_prev2, x_next, tol);
    }
    x_prev2 = x_prev;
    x_prev = x_next;
    f_prev = f_next;
  }
}

ScalarSolve minimize_free(const ScalarFn& f, double x0, double step_hint,
                          double tol, const ScalarFn& df, int max_doublings) {
  if (!(tol > 0.0)) throw std::invalid_argument("minimize_free: tol must be > 0");
  Tracker t{f};
  double f0 = t(x0);
  double h = step_hint > 0.0 ? step_hint : 1.0;
  double fp = t(x0 + h);
  double fm = t(x0 - h);

  if (f0 <= fp && f0 <= fm) {
    return refine(t, df, x0 - h, x0 + h, tol);
  }

  double dir = fp < fm ? 1.0 : -1.0;
  double x_prev2 = x0;
  double x_prev = x0 + dir * h;
  double f_prev = dir > 0 ? fp : fm;
  int doublings = 0;
  for (;;) {
    if (++doublings > max_doublings)
      throw std::runtime_error(
          "minimize_free: bracket cap exceeded (direction appears unbounded below)");
    h *= 2.0;
    double x_next = x_prev + dir * h;
    double f_next = t(x_next);
    if (f_next >= f_prev) {
      return refine(t, df, std::min(x_prev2, x_next), std::max(x_prev2, x_next),
                    tol);
    }
    x_prev2 = x_prev;
    x_prev = x_next;
    f_prev = f_next;
  }
}

ScalarSolve minimize_bounded(const ScalarFn& f, double lo, double hi,
                             double tol, const ScalarFn& df) {
  if (!(tol > 0.0)) throw std::invalid_argument("minimize_bounded: tol must be > 0");
  if (!(hi >= lo)) throw std::invalid_argument("minimize_bounded: hi < lo");
  Tracker t{f};
  double flo = t(lo);
  t(hi);
  if (hi == lo) return {lo, flo, t.evals, true};
  if (df) {
    double dlo = df(lo);
    double dhi = df(hi);
    if (std::isfinite(dlo) && dlo >= 0.0) return {t.best_x, t.best_f, t.evals, true};
    if (std::isfinite(dhi) && dhi <= 0.0) return {t.best_x, t.best_f, t.evals, true};
  }
  return refine(t, df, lo, hi, tol);
}

}  // namespace greedyopt
