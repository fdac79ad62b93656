#pragma once

#include <cstdint>

namespace mmm {

// splitmix64 finalizer; the statistical core of the counter RNG below.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive combine of a seed with up to three coordinates. Pure
// function of its arguments, so any parallel decomposition of a generation
// loop produces identical streams.
inline uint64_t hash_coords(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  uint64_t h = mix64(seed ^ 0x7fb5d329728ea185ULL);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  return mix64(h ^ c);
}

// Uniform in [0, 1) from the top 53 bits.
inline double unit_double(uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// Sequential counter stream for the few places that want draw-by-draw
// randomness (e.g. sampling a fixed-size subset).
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : seed_(hash_coords(seed, stream, 0x5eedULL)) {}

  uint64_t next() { return mix64(seed_ ^ mix64(counter_++)); }

  // Unbiased-enough bounded draw (multiply-shift).
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
  }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace mmm
