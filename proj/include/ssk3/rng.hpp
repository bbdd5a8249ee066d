#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ssk3 {

// Deterministic seeded RNG. std::mt19937_64 has a standard-pinned output
// sequence; we avoid std::uniform_int_distribution (implementation-defined)
// and map to a range by rejection sampling instead, so equal seeds give
// equal draws on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    // Accept draws >= 2^64 mod bound; the accepted range has size divisible
    // by bound, so the result is exactly uniform.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = eng_();
      if (x >= threshold) return (x - threshold) % bound;
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Stable sub-seed derivation: FNV-1a over the label folded into the master
// seed through a splitmix64 finalizer. Used to give each verification suite
// (and each grid point inside a suite) an independent, reproducible stream.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ssk3
