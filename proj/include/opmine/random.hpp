#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "opmine/hash.hpp"

namespace opmine {

// Deterministic PRNG (splitmix64). All shuffles in the project go through
// this generator so results do not depend on the standard library build.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

// Derives an independent stream seed for a named consumer ("split",
// "svm-class-positive", ...). Adding a consumer never perturbs the others.
inline std::uint64_t fork_seed(std::uint64_t base, std::string_view label) {
  return SplitMix64(base ^ fnv1a64(label)).next();
}

}  // namespace opmine
