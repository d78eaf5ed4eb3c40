#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "greedyopt/vec.hpp"

namespace greedyopt {

// Empirically validated power-type envelope for the symmetric second
// difference of a target: rho(u) <= gamma * u^q_power on the sampled set.
struct SmoothnessProfile {
  double q_power = 2.0;
  double gamma = 0.5;
};

// Analytic envelope for the p-th power of the p-norm: q = min(p, 2) with
// gamma = 1/p on the first branch and (p-1)/2 on the second (they agree at
// p = 2). Rejects p < 1.
SmoothnessProfile power_type_bound(double p);

// Convex target with analytic value and gradient. Two families:
//   shifted-pnorm:  E(x) = sum_i |x_i - f_i|^p,                       p > 1
//   composite:      E(x) = ||x-f||_p^p * ||g||_q^q + ||x-g||_q^q * ||f||_p^p
// Both are finite, convex, and continuously differentiable everywhere.
class Objective {
 public:
  enum class Kind { ShiftedPNorm, Composite };

  static Objective shifted_pnorm(Vec f, double p);
  static Objective composite(Vec f, double p, Vec g, double q);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return f_.size(); }
  double p() const { return p_; }
  double q() const { return q_; }
  const Vec& shift_f() const { return f_; }
  const Vec& shift_g() const { return g_; }
  // Cached instance constants ||f||_p^p and ||g||_q^q (composite only).
  double f_norm_pow() const { return f_norm_pow_; }
  double g_norm_pow() const { return g_norm_pow_; }

  double value(const Vec& x) const;
  void gradient(const Vec& x, Vec& out) const;
  Vec gradient(const Vec& x) const;
  // <E'(x), w> without materializing the gradient.
  double dir_deriv(const Vec& x, const Vec& w) const;

  std::string descriptor() const;

 private:
  Objective() = default;
  void check_dim(const Vec& x) const;

  Kind kind_ = Kind::ShiftedPNorm;
  Vec f_, g_;
  double p_ = 2.0, q_ = 2.0;
  double f_norm_pow_ = 0.0, g_norm_pow_ = 0.0;
};

// Max over coordinates of the relative error between the analytic gradient
// and the central difference (E(x+h e_i) - E(x-h e_i)) / (2h).
double grad_check(const Objective& obj, const Vec& x, double h);

// Empirical lower bound on the modulus of smoothness at step u: max over the
// sampled points and directions of |E(x+uy) + E(x-uy) - 2E(x)| / 2.
// Directions are unit-l1: all +-e_i when dim <= 64, otherwise 256 seeded
// random unit-l1 vectors.
double estimate_modulus(const Objective& obj, std::span<const Vec> sample_xs,
                        double u, std::uint64_t seed = 0);

}  // namespace greedyopt
