#pragma once

// Seeded generators for property sweeps and randomized corpora. Item i of a
// corpus draws from its own stream seeded by splitmix64(seed, i), so corpora
// can be split across threads without changing their content. Sampling is
// done by hand (rejection, bit counting) rather than with <random>
// distributions, whose outputs differ between standard libraries.

#include <cstdint>
#include <random>

#include "dirichlet_lab/core/exact.hpp"

namespace dirichlet_lab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (index * 0xD1B54A32D192ED03ULL);
  splitmix64(state);
  return splitmix64(state);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t index) : engine_(item_seed(seed, index)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + r % span;
  }

  bool coin() { return next() >> 63; }

  // 1 + Geometric(1/2), capped: P(d = k) = 2^-k for k below the cap.
  std::uint64_t geometric_digit(std::uint64_t cap = 1000000) {
    std::uint64_t d = 1;
    while (d < cap) {
      std::uint64_t bits = next();
      if (bits != UINT64_MAX) {
        d += static_cast<std::uint64_t>(__builtin_ctzll(~bits));
        break;
      }
      d += 64;
    }
    return d < cap ? d : cap;
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform(0, items.size() - 1)];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dirichlet_lab
