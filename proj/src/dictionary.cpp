#include "greedyopt/dictionary.hpp"

#include <cmath>
#include <stdexcept>

#include "greedyopt/rng.hpp"

namespace greedyopt {

Dictionary::Dictionary(std::size_t dim, std::size_t natoms,
                       std::vector<double> data, std::string descriptor)
    : dim_(dim),
      natoms_(natoms),
      data_(std::move(data)),
      descriptor_(std::move(descriptor)) {}

Dictionary Dictionary::canonical(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dictionary: dim must be > 0");
  std::vector<double> data(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) data[i * dim + i] = 1.0;
  return Dictionary(dim, dim, std::move(data),
                    "canonical(dim=" + std::to_string(dim) + ")");
}

Dictionary Dictionary::random_uniform(std::size_t dim, std::size_t natoms,
                                      std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("dictionary: dim must be > 0");
  if (natoms == 0) throw std::invalid_argument("dictionary: natoms must be > 0");
  std::vector<double> data(natoms * dim);
  Rng rng(seed);
  for (std::size_t j = 0; j < natoms; ++j) {
    double* atom = data.data() + j * dim;
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      atom[i] = rng.next_uniform();
      norm += atom[i];  // entries are nonnegative
    }
    if (norm <= 0.0) throw std::runtime_error("dictionary: zero atom drawn");
    for (std::size_t i = 0; i < dim; ++i) atom[i] /= norm;
  }
  return Dictionary(dim, natoms, std::move(data),
                    "random-uniform(dim=" + std::to_string(dim) +
                        ",natoms=" + std::to_string(natoms) +
                        ",seed=" + std::to_string(seed) + ")");
}

void Dictionary::add_scaled_atom(Vec& x, std::size_t j, double a) const {
  axpy(a, atom(j), x);
}

Vec Dictionary::combine(std::span<const std::size_t> indices,
                        std::span<const double> coeffs) const {
  Vec x(dim_, 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    add_scaled_atom(x, indices[k], coeffs[k]);
  }
  return x;
}

Dictionary build_dictionary(const DictionarySpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case DictionarySpec::Kind::Canonical:
      return Dictionary::canonical(spec.dim);
    case DictionarySpec::Kind::RandomUniform:
      return Dictionary::random_uniform(spec.dim, spec.natoms, seed);
  }
  throw std::invalid_argument("build_dictionary: unknown kind");
}

AtomChoice best_atom(const Vec& neg_gradient, const Dictionary& dict,
                     double weakness_t) {
  if (dict.size() == 0) throw std::invalid_argument("best_atom: empty dictionary");
  if (neg_gradient.size() != dict.dim())
    throw std::invalid_argument("best_atom: dimension mismatch");
  if (!(weakness_t > 0.0 && weakness_t <= 1.0))
    throw std::invalid_argument("best_atom: weakness t must be in (0,1]");

  AtomChoice best;
  best.score = -1.0;
  for (std::size_t j = 0; j < dict.size(); ++j) {
    double s = dot(neg_gradient, dict.atom(j));
    double mag = std::fabs(s);
    if (mag > best.score) {
      best.index = j;
      best.sign = s < 0.0 ? -1 : 1;
      best.score = mag;
    }
  }
  return best;
}

}  // namespace greedyopt
