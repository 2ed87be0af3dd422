#pragma once

#include <cstdint>

namespace sumfree {

// Counter-based splittable generator: output i of stream `seed` is
// splitmix64(seed ^ golden*stream_index) style mixing of a 128-bit key.
// Pure function of (seed, stream, counter), so identical seeds reproduce
// identical draws on every platform; no OS entropy anywhere.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), counter_(0) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (counter_++ + 1);
    z ^= stream_ * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in {0,...,bound-1} via rejection sampling; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Derives an independent stream deterministically.
  CounterRng split(std::uint64_t substream) const {
    return CounterRng(seed_, stream_ * 0x9e3779b97f4a7c15ULL + substream + 1);
  }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_;
};

}  // namespace sumfree
