#pragma once

#include <cmath>

namespace greedyopt::kernels::detail {

// Exponent classification shared by the scalar and SIMD backends: small
// integer exponents go through multiply chains, everything else through
// std::pow. Returns the integer exponent, or -1 when not applicable.
inline int small_int_exponent(double p) {
  if (p < 1.0 || p > 8.0) return -1;
  double ip;
  if (std::modf(p, &ip) != 0.0) return -1;
  return static_cast<int>(ip);
}

// |d|^e for small integer e >= 1 by squaring.
inline double pow_int(double ad, int e) {
  double result = 1.0;
  double base = ad;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace greedyopt::kernels::detail
