#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace emtsf {

// std::mt19937_64 is fully specified by the standard, so seeded streams are
// reproducible across compilers and platforms. All sampling helpers below
// avoid std::uniform_*_distribution, whose output is implementation-defined.
using Rng = std::mt19937_64;

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Mixes a base seed with a name so each parameter gets its own stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view name) {
  std::uint64_t z = base ^ fnv1a64(name);
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) using the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [-bound, bound).
inline double uniform_sym(Rng& rng, double bound) {
  return (2.0 * uniform01(rng) - 1.0) * bound;
}

// Bounded index draw for shuffling. The modulo bias is irrelevant for the
// array sizes used here and keeps the mapping platform-stable.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// In-place Fisher-Yates with a pinned draw rule (std::shuffle is
// implementation-defined and would break bit-reproducibility).
template <typename Vec>
void deterministic_shuffle(Vec& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = uniform_index(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace emtsf
