#pragma once

#include <cstdint>
#include <random>

namespace thompson {

// Deterministic seed mixing; avalanche-quality spread of (master, stream) pairs.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic stream of uniform draws; identical across platforms because
// mt19937_64 output and the rejection sampler below are fully specified.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}
  // Substream t of a master seed; distinct (master, t) give independent streams.
  RandomStream(std::uint64_t master, std::uint64_t stream)
      : eng_(splitmix64(splitmix64(master) ^ splitmix64(stream + 0x51a2b3c4d5e6f708ULL))) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, bound); rejection sampling, no distribution objects
  // (std distributions are not portable across standard libraries).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  bool coin() { return (next_u64() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace thompson
