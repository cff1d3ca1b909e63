#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace ramseq {

/// SplitMix64 finalizer; used to derive independent sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for trial `index` of a run started from `seed`. Depends only on the
/// pair, so trials can be evaluated in any order or concurrently.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

/// std::mt19937_64 with portable draws.
///
/// The engine's output sequence is fixed by the standard, but the standard
/// distributions are not, so uniform doubles and bounded integers are derived
/// here directly from the raw 64-bit words.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Exponential(1) variate.
  double exponential();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ramseq
