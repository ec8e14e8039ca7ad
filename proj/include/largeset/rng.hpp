#ifndef LARGESET_RNG_HPP
#define LARGESET_RNG_HPP

#include <cstdint>

namespace largeset {

// SplitMix64. Used everywhere a seeded, platform-independent stream is
// needed (fixture generation, randomized property checks). std::mt19937
// would also be portable, but the distributions on top of it are not.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive.
  uint64_t below(uint64_t n) {
    // multiply-shift; bias is < 2^-64 per draw, irrelevant at our scales
    return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

}  // namespace largeset

#endif
