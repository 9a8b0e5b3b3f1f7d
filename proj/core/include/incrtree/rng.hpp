#pragma once

#include <cstdint>
#include <random>

namespace incrtree {

// Deterministic RNG wrapper. mt19937_64 has a standard-mandated output
// sequence, and the bounded-draw helpers below avoid std::*_distribution,
// whose results are implementation defined. Reports that promise
// byte-identical reruns rely on this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

// SplitMix64 finalizer; used to derive independent per-worker seeds from a
// master seed. Documented so seed manifests can be reproduced externally.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix_seed(master + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

}  // namespace incrtree
