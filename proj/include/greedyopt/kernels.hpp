#pragma once

#include <cstddef>

namespace greedyopt::kernels {

// Function-pointer table for the dense inner loops. The scalar backend is the
// reference implementation; SIMD backends must agree with it within small
// relative tolerances (summation order and FMA contraction change rounding).
//
// Power kernels: `shift` may be null, in which case d_i = x_i, otherwise
// d_i = x_i - shift_i. The exponent p is uniform per call.
struct Backend {
  const char* name;

  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum_abs)(const double* x, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x *= a
  void (*scale)(double a, double* x, std::size_t n);
  // out_i = sign(v_i) * max(|v_i| - kappa, 0)
  void (*soft_threshold)(const double* v, std::size_t n, double kappa,
                         double* out);
  // sum_i |d_i|^p, p >= 1
  double (*diff_pow_sum)(const double* x, const double* shift, std::size_t n,
                         double p);
  // out_i += w * p * sign(d_i) * |d_i|^(p-1), p > 1
  void (*diff_pow_grad_acc)(const double* x, const double* shift,
                            std::size_t n, double p, double w, double* out);
  // sum_i v_i * p * sign(d_i) * |d_i|^(p-1), p > 1
  double (*diff_pow_grad_dot)(const double* x, const double* shift,
                              const double* v, std::size_t n, double p);
};

const Backend& scalar_backend();

bool avx2_supported();
// Only valid to call through when avx2_supported() is true.
const Backend& avx2_backend();

// Runtime-selected backend: AVX2 when the CPU supports it, scalar otherwise.
// Env var GREEDYOPT_KERNELS=scalar|avx2 overrides (avx2 silently falls back
// to scalar on unsupported hardware). The choice is made once per process.
const Backend& active();

}  // namespace greedyopt::kernels
