#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "greedyopt/kernels.hpp"

namespace greedyopt {

// Points of the ambient space and, dually, linear functionals (gradients) on
// it. Plain dense storage; all arithmetic goes through the kernel backends.
using Vec = std::vector<double>;

bool all_finite(std::span<const double> v);
// Throws std::invalid_argument when v contains NaN/Inf.
void require_finite(std::span<const double> v, const char* what);

// (sum_i |v_i|^p)^(1/p) for p >= 1. Rejects p < 1 and non-finite entries.
double lp_norm(const Vec& v, double p);

// Dual pairing sum_i f_i v_i. Rejects length mismatch.
double pairing(const Vec& functional, const Vec& v);

inline double dot(std::span<const double> a, std::span<const double> b) {
  return kernels::active().dot(a.data(), b.data(), a.size());
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  kernels::active().axpy(a, x.data(), y.data(), x.size());
}

inline void scale_inplace(double a, std::span<double> x) {
  kernels::active().scale(a, x.data(), x.size());
}

inline double max_abs(std::span<const double> x) {
  return kernels::active().max_abs(x.data(), x.size());
}

inline double sum_abs(std::span<const double> x) {
  return kernels::active().sum_abs(x.data(), x.size());
}

}  // namespace greedyopt
