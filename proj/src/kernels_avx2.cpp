// AVX2 + FMA backend. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after a runtime CPU check (see kernels.cpp).

#include "greedyopt/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "pow_detail.hpp"

namespace greedyopt::kernels {
namespace {

using detail::pow_int;
using detail::small_int_exponent;

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline __m256d sign_bits(__m256d v) {
  return _mm256_and_pd(v, _mm256_set1_pd(-0.0));
}

// |d|^e elementwise by squaring; e >= 1 uniform across lanes.
inline __m256d pow_int_pd(__m256d ad, int e) {
  __m256d result = _mm256_set1_pd(1.0);
  __m256d base = ad;
  while (e > 0) {
    if (e & 1) result = _mm256_mul_pd(result, base);
    base = _mm256_mul_pd(base, base);
    e >>= 1;
  }
  return result;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_abs_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double max_abs_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yi = _mm256_loadu_pd(y + i);
    yi = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yi);
    _mm256_storeu_pd(y + i, yi);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
  __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

void soft_threshold_avx2(const double* v, std::size_t n, double kappa,
                         double* out) {
  __m256d kv = _mm256_set1_pd(kappa);
  __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vi = _mm256_loadu_pd(v + i);
    __m256d mag = _mm256_max_pd(_mm256_sub_pd(abs_pd(vi), kv), zero);
    _mm256_storeu_pd(out + i, _mm256_or_pd(mag, sign_bits(vi)));
  }
  for (; i < n; ++i) {
    double m = std::fabs(v[i]) - kappa;
    out[i] = m > 0.0 ? std::copysign(m, v[i]) : 0.0;
  }
}

inline __m256d load_diff(const double* x, const double* shift, std::size_t i) {
  __m256d xi = _mm256_loadu_pd(x + i);
  return shift ? _mm256_sub_pd(xi, _mm256_loadu_pd(shift + i)) : xi;
}

double diff_pow_sum_avx2(const double* x, const double* shift, std::size_t n,
                         double p) {
  int e = small_int_exponent(p);
  std::size_t i = 0;
  double s = 0.0;
  if (e > 0) {
    __m256d acc = _mm256_setzero_pd();
    if (e == 2) {
      for (; i + 4 <= n; i += 4) {
        __m256d d = load_diff(x, shift, i);
        acc = _mm256_fmadd_pd(d, d, acc);
      }
    } else {
      for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, pow_int_pd(abs_pd(load_diff(x, shift, i)), e));
      }
    }
    s = hsum(acc);
    for (; i < n; ++i) {
      double d = shift ? x[i] - shift[i] : x[i];
      s += e == 2 ? d * d : pow_int(std::fabs(d), e);
    }
  } else {
    // Fractional exponents stay on std::pow; there is no vector pow here.
    for (; i < n; ++i) {
      double d = shift ? x[i] - shift[i] : x[i];
      s += std::pow(std::fabs(d), p);
    }
  }
  return s;
}

void diff_pow_grad_acc_avx2(const double* x, const double* shift,
                            std::size_t n, double p, double w, double* out) {
  int em1 = small_int_exponent(p - 1.0);
  double wp = w * p;
  std::size_t i = 0;
  if (em1 > 0) {
    __m256d wpv = _mm256_set1_pd(wp);
    for (; i + 4 <= n; i += 4) {
      __m256d d = load_diff(x, shift, i);
      __m256d mag = _mm256_mul_pd(wpv, pow_int_pd(abs_pd(d), em1));
      __m256d term = _mm256_or_pd(mag, sign_bits(d));
      _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), term));
    }
  }
  for (; i < n; ++i) {
    double d = shift ? x[i] - shift[i] : x[i];
    if (d == 0.0) continue;
    double mag = em1 > 0 ? pow_int(std::fabs(d), em1) : std::pow(std::fabs(d), p - 1.0);
    out[i] += std::copysign(wp * mag, d);
  }
}

double diff_pow_grad_dot_avx2(const double* x, const double* shift,
                              const double* v, std::size_t n, double p) {
  int em1 = small_int_exponent(p - 1.0);
  std::size_t i = 0;
  double s = 0.0;
  if (em1 > 0) {
    __m256d pv = _mm256_set1_pd(p);
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
      __m256d d = load_diff(x, shift, i);
      __m256d mag = _mm256_mul_pd(pv, pow_int_pd(abs_pd(d), em1));
      __m256d term = _mm256_or_pd(mag, sign_bits(d));
      acc = _mm256_fmadd_pd(term, _mm256_loadu_pd(v + i), acc);
    }
    s = hsum(acc);
  }
  for (; i < n; ++i) {
    double d = shift ? x[i] - shift[i] : x[i];
    if (d == 0.0) continue;
    double mag = em1 > 0 ? pow_int(std::fabs(d), em1) : std::pow(std::fabs(d), p - 1.0);
    s += v[i] * std::copysign(p * mag, d);
  }
  return s;
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend backend = {
      "avx2",
      dot_avx2,
      sum_abs_avx2,
      max_abs_avx2,
      axpy_avx2,
      scale_avx2,
      soft_threshold_avx2,
      diff_pow_sum_avx2,
      diff_pow_grad_acc_avx2,
      diff_pow_grad_dot_avx2,
  };
  return backend;
}

}  // namespace greedyopt::kernels

#endif  // x86
