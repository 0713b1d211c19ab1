#pragma once

#include <cstdint>

namespace cover {

/// SplitMix64 in counter mode: state advances by a fixed odd increment and
/// every output is a bijective mix of the state. Streams for (seed, k) are
/// independent of execution order and identical on every platform.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Generator for sub-stream `k` of `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t k) {
    return SplitMix64(mix(seed ^ mix(k + 0x632be59bd9b4e019ULL)));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

}  // namespace cover
