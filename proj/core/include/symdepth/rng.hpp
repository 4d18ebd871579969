#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace symdepth {

/// Deterministic random source. The engine is the standardized mt19937_64,
/// and all sampling is hand-rolled on top of its raw output, so a fixed seed
/// yields the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive, via rejection sampling.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<int>(next());  // full 64-bit range
    std::uint64_t threshold = (~span + 1) % span;    // 2^64 mod span
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return lo + static_cast<int>(r % span);
    }
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symdepth
