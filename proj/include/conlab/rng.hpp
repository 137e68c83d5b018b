// rng.hpp -- deterministic random draws with explicit per-trial streams.
#pragma once

#include <cstdint>

namespace conlab {

/// Counter-based generator (splitmix64 core). Streams derived from
/// (seed, stream) pairs are independent and platform-stable, which keeps
/// parallel campaigns reproducible under any thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {
    next_u64();  // decorrelates nearby seeds
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  long long uniform_int(long long lo, long long hi) {
    return lo + (long long)(next_u64() % (std::uint64_t)(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace conlab
