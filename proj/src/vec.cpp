#include "greedyopt/vec.hpp"

#include <cmath>
#include <stdexcept>

namespace greedyopt {

bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void require_finite(std::span<const double> v, const char* what) {
  if (!all_finite(v)) {
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

double lp_norm(const Vec& v, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  require_finite(v, "lp_norm");
  const auto& k = kernels::active();
  if (p == 1.0) return k.sum_abs(v.data(), v.size());
  if (p == 2.0) return std::sqrt(k.dot(v.data(), v.data(), v.size()));
  return std::pow(k.diff_pow_sum(v.data(), nullptr, v.size(), p), 1.0 / p);
}

double pairing(const Vec& functional, const Vec& v) {
  if (functional.size() != v.size())
    throw std::invalid_argument("pairing: length mismatch");
  return kernels::active().dot(functional.data(), v.data(), v.size());
}

}  // namespace greedyopt
