#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "greedyopt/vec.hpp"

namespace greedyopt {

// Ordered set of unit-l1-norm atoms over the ambient space. Dictionaries are
// symmetric by convention: only one orientation of each atom is stored and
// selection may use either +g or -g (see AtomChoice::sign).
class Dictionary {
 public:
  // Canonical basis e_1..e_dim.
  static Dictionary canonical(std::size_t dim);

  // Each coefficient drawn from U(0,1) with the seeded generator, then the
  // atom is divided by its l1 norm. Deterministic given the seed.
  static Dictionary random_uniform(std::size_t dim, std::size_t natoms,
                                   std::uint64_t seed);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return natoms_; }

  std::span<const double> atom(std::size_t j) const {
    return {data_.data() + j * dim_, dim_};
  }

  // x += a * atom(j)
  void add_scaled_atom(Vec& x, std::size_t j, double a) const;

  // sum_k coeffs[k] * atom(indices[k])
  Vec combine(std::span<const std::size_t> indices,
              std::span<const double> coeffs) const;

  const std::string& descriptor() const { return descriptor_; }

 private:
  Dictionary(std::size_t dim, std::size_t natoms, std::vector<double> data,
             std::string descriptor);

  std::size_t dim_ = 0;
  std::size_t natoms_ = 0;
  std::vector<double> data_;  // row-major natoms x dim
  std::string descriptor_;
};

struct DictionarySpec {
  enum class Kind { RandomUniform, Canonical };
  Kind kind = Kind::RandomUniform;
  std::size_t dim = 0;
  std::size_t natoms = 0;  // ignored for canonical
};

Dictionary build_dictionary(const DictionarySpec& spec, std::uint64_t seed);

// Result of a greedy selection scan: the atom index, the orientation that
// makes the pairing nonnegative, and that nonnegative pairing value.
struct AtomChoice {
  std::size_t index = 0;
  int sign = 1;
  double score = 0.0;
};

// Scans |<neg_gradient, g_j>| over all atoms and returns the maximizer (ties
// broken by lowest index; a zero pairing gets sign +1). weakness_t must lie in
// (0, 1]; the returned choice is always the exact argmax, so its score
// satisfies the weak-selection threshold for any such t.
AtomChoice best_atom(const Vec& neg_gradient, const Dictionary& dict,
                     double weakness_t = 1.0);

}  // namespace greedyopt
