#ifndef PARTLAT_RNG_HPP
#define PARTLAT_RNG_HPP

#include <cstdint>

#include "partlat/bigint.hpp"

namespace partlat {

// xorshift64* with the classic constants (Vigna 2014). The exact output
// stream for a given seed is part of the tool's reproducibility contract:
// every --seed-driven command must produce identical results across runs
// and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 2685821657736338717ULL;
  }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, bound) for arbitrary-precision bounds, by rejection on
  // the bit length of bound-1.
  BigCount below_big(const BigCount& bound);

  // Derives an independent substream; splitmix-style mixing so that
  // (seed, index) pairs give uncorrelated streams regardless of schedule.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

}  // namespace partlat

#endif
