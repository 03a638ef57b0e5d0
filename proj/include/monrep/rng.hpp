// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_RNG_HPP
#define MONREP_RNG_HPP

#include <cstdint>

namespace monrep {

//! Deterministic counter-based generator (splitmix64).  The state advances
//! by a fixed odd increment per draw, so identical seeds give identical
//! streams on every platform.  Randomised searches are reproducible and
//! never touch global state.
class Rng {
 public:
  static constexpr std::uint64_t default_seed = 0xB0;

  explicit Rng(std::uint64_t seed = default_seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  //! Uniform-ish draw in [0, n); the modulo bias is irrelevant at the sizes
  //! used here (n far below 2^32).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace monrep

#endif  // MONREP_RNG_HPP
