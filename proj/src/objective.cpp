#include "greedyopt/objective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "greedyopt/rng.hpp"

namespace greedyopt {

SmoothnessProfile power_type_bound(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("power_type_bound: p must be >= 1");
  if (p <= 2.0) return {p, 1.0 / p};
  return {2.0, (p - 1.0) / 2.0};
}

Objective Objective::shifted_pnorm(Vec f, double p) {
  if (!(p > 1.0))
    throw std::invalid_argument("objective: p must be > 1 for a continuous gradient");
  require_finite(f, "objective shift");
  Objective obj;
  obj.kind_ = Kind::ShiftedPNorm;
  obj.p_ = p;
  obj.f_ = std::move(f);
  return obj;
}

Objective Objective::composite(Vec f, double p, Vec g, double q) {
  if (!(p > 1.0) || !(q > 1.0))
    throw std::invalid_argument("objective: p, q must be > 1");
  if (f.size() != g.size())
    throw std::invalid_argument("objective: f/g dimension mismatch");
  require_finite(f, "objective shift f");
  require_finite(g, "objective shift g");
  Objective obj;
  obj.kind_ = Kind::Composite;
  obj.p_ = p;
  obj.q_ = q;
  obj.f_ = std::move(f);
  obj.g_ = std::move(g);
  const auto& k = kernels::active();
  obj.f_norm_pow_ = k.diff_pow_sum(obj.f_.data(), nullptr, obj.f_.size(), p);
  obj.g_norm_pow_ = k.diff_pow_sum(obj.g_.data(), nullptr, obj.g_.size(), q);
  return obj;
}

void Objective::check_dim(const Vec& x) const {
  if (x.size() != f_.size())
    throw std::invalid_argument("objective: dimension mismatch");
}

double Objective::value(const Vec& x) const {
  check_dim(x);
  const auto& k = kernels::active();
  double fp = k.diff_pow_sum(x.data(), f_.data(), x.size(), p_);
  if (kind_ == Kind::ShiftedPNorm) return fp;
  double gq = k.diff_pow_sum(x.data(), g_.data(), x.size(), q_);
  return fp * g_norm_pow_ + gq * f_norm_pow_;
}

void Objective::gradient(const Vec& x, Vec& out) const {
  check_dim(x);
  out.assign(x.size(), 0.0);
  const auto& k = kernels::active();
  if (kind_ == Kind::ShiftedPNorm) {
    k.diff_pow_grad_acc(x.data(), f_.data(), x.size(), p_, 1.0, out.data());
    return;
  }
  k.diff_pow_grad_acc(x.data(), f_.data(), x.size(), p_, g_norm_pow_, out.data());
  k.diff_pow_grad_acc(x.data(), g_.data(), x.size(), q_, f_norm_pow_, out.data());
}

Vec Objective::gradient(const Vec& x) const {
  Vec out;
  gradient(x, out);
  return out;
}

double Objective::dir_deriv(const Vec& x, const Vec& w) const {
  check_dim(x);
  const auto& k = kernels::active();
  if (kind_ == Kind::ShiftedPNorm) {
    return k.diff_pow_grad_dot(x.data(), f_.data(), w.data(), x.size(), p_);
  }
  return g_norm_pow_ *
             k.diff_pow_grad_dot(x.data(), f_.data(), w.data(), x.size(), p_) +
         f_norm_pow_ *
             k.diff_pow_grad_dot(x.data(), g_.data(), w.data(), x.size(), q_);
}

std::string Objective::descriptor() const {
  if (kind_ == Kind::ShiftedPNorm) {
    return "shifted-pnorm(p=" + std::to_string(p_) +
           ",dim=" + std::to_string(dim()) + ")";
  }
  return "composite(p=" + std::to_string(p_) + ",q=" + std::to_string(q_) +
         ",dim=" + std::to_string(dim()) + ")";
}

double grad_check(const Objective& obj, const Vec& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("grad_check: h must be > 0");
  Vec grad = obj.gradient(x);
  Vec xp = x;
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double hi = h * (1.0 + std::fabs(x[i]));
    xp[i] = x[i] + hi;
    double fp = obj.value(xp);
    xp[i] = x[i] - hi;
    double fm = obj.value(xp);
    xp[i] = x[i];
    double fd = (fp - fm) / (2.0 * hi);
    double denom = std::max({std::fabs(grad[i]), std::fabs(fd), 1.0});
    worst = std::max(worst, std::fabs(grad[i] - fd) / denom);
  }
  return worst;
}

double estimate_modulus(const Objective& obj, std::span<const Vec> sample_xs,
                        double u, std::uint64_t seed) {
  if (!(u > 0.0)) throw std::invalid_argument("estimate_modulus: u must be > 0");
  if (sample_xs.empty())
    throw std::invalid_argument("estimate_modulus: empty sample set");
  const std::size_t dim = obj.dim();

  std::vector<Vec> dirs;
  if (dim <= 64) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e(dim, 0.0);
      e[i] = 1.0;
      dirs.push_back(e);
      e[i] = -1.0;
      dirs.push_back(std::move(e));
    }
  } else {
    Rng rng(mix_seed(seed, 0x6d6f64));
    for (int k = 0; k < 256; ++k) {
      Vec y(dim);
      double norm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        y[i] = rng.next_normal();
        norm += std::fabs(y[i]);
      }
      for (std::size_t i = 0; i < dim; ++i) y[i] /= norm;
      dirs.push_back(std::move(y));
    }
  }

  double best = 0.0;
  Vec z(dim);
  for (const Vec& x : sample_xs) {
    double ex = obj.value(x);
    for (const Vec& y : dirs) {
      for (std::size_t i = 0; i < dim; ++i) z[i] = x[i] + u * y[i];
      double ep = obj.value(z);
      for (std::size_t i = 0; i < dim; ++i) z[i] = x[i] - u * y[i];
      double em = obj.value(z);
      best = std::max(best, 0.5 * std::fabs(ep + em - 2.0 * ex));
    }
  }
  return best;
}

}  // namespace greedyopt
