#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace greedyopt {

// Seeded generator with fully pinned derived draws, so that a seed reproduces
// instances bit-for-bit across platforms: mt19937_64 (standard-specified)
// plus explicit uniform/normal/permutation constructions on top of it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; pairs are cached.
  double next_normal();

  // Uniform integer in [0, bound) by rejection (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound);

  // Fisher-Yates shuffle of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stateless mix for deriving independent stream seeds (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace greedyopt
