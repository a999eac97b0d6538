#include "partlat/rng.hpp"

namespace partlat {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection to avoid modulo bias.
  std::uint64_t limit = bound * (0xffffffffffffffffULL / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

BigCount Rng::below_big(const BigCount& bound) {
  if (bound <= 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  while (true) {
    BigCount x = 0;
    for (unsigned got = 0; got < bits; got += 64) {
      x <<= 64;
      x |= next();
    }
    x >>= (64 - bits % 64) % 64;
    if (x < bound) return x;
  }
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined key.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return Rng(z);
}

}  // namespace partlat
