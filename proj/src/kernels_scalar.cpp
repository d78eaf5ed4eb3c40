#include "greedyopt/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "pow_detail.hpp"

namespace greedyopt::kernels {
namespace {

using detail::pow_int;
using detail::small_int_exponent;

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_abs_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void soft_threshold_scalar(const double* v, std::size_t n, double kappa,
                           double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double m = std::fabs(v[i]) - kappa;
    out[i] = m > 0.0 ? std::copysign(m, v[i]) : 0.0;
  }
}

double diff_pow_sum_scalar(const double* x, const double* shift, std::size_t n,
                           double p) {
  double s = 0.0;
  int e = small_int_exponent(p);
  if (e == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      double d = shift ? x[i] - shift[i] : x[i];
      s += d * d;
    }
  } else if (e > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      double d = shift ? x[i] - shift[i] : x[i];
      s += pow_int(std::fabs(d), e);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      double d = shift ? x[i] - shift[i] : x[i];
      s += std::pow(std::fabs(d), p);
    }
  }
  return s;
}

// term_i = w * p * sign(d_i) * |d_i|^(p-1); |0|^(p-1) = 0 for p > 1.
inline double grad_term(double d, double p, int em1, double wp) {
  if (d == 0.0) return 0.0;
  double ad = std::fabs(d);
  double mag = em1 > 0 ? pow_int(ad, em1) : std::pow(ad, p - 1.0);
  return std::copysign(wp * mag, d);
}

void diff_pow_grad_acc_scalar(const double* x, const double* shift,
                              std::size_t n, double p, double w, double* out) {
  int em1 = small_int_exponent(p - 1.0);
  double wp = w * p;
  for (std::size_t i = 0; i < n; ++i) {
    double d = shift ? x[i] - shift[i] : x[i];
    out[i] += grad_term(d, p, em1, wp);
  }
}

double diff_pow_grad_dot_scalar(const double* x, const double* shift,
                                const double* v, std::size_t n, double p) {
  int em1 = small_int_exponent(p - 1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = shift ? x[i] - shift[i] : x[i];
    s += v[i] * grad_term(d, p, em1, p);
  }
  return s;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend = {
      "scalar",
      dot_scalar,
      sum_abs_scalar,
      max_abs_scalar,
      axpy_scalar,
      scale_scalar,
      soft_threshold_scalar,
      diff_pow_sum_scalar,
      diff_pow_grad_acc_scalar,
      diff_pow_grad_dot_scalar,
  };
  return backend;
}

}  // namespace greedyopt::kernels
