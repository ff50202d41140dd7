#ifndef ROBUST_RNG_HPP
#define ROBUST_RNG_HPP

#include <cstdint>

namespace robust {

/// SplitMix64 generator. All randomness in the project flows from a single
/// 64-bit seed through this state transition, so runs are reproducible
/// bit-exactly:
///   state += 0x9E3779B97F4A7C15
///   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound > 0; plain modulo by design so the
  /// sequence is easy to reproduce in other languages.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace robust

#endif
