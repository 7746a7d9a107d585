#pragma once

#include <cstdint>
#include <random>

namespace rfg {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic RNG stream: every consumer is reproducible from (seed, stream).
/// Streams are derived by hashing, so disjoint stream ids give independent
/// sequences regardless of scheduling. Bounded draws use Lemire rejection to
/// stay portable across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : eng_(derive(seed, stream)) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    using u128 = unsigned __int128;
    u128 m = u128(next_u64()) * bound;
    auto lo = std::uint64_t(m);
    if (lo < bound) {
      std::uint64_t t = std::uint64_t(-bound) % bound;
      while (lo < t) {
        m = u128(next_u64()) * bound;
        lo = std::uint64_t(m);
      }
    }
    return std::uint64_t(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double u01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // UniformRandomBitGenerator interface
  using result_type = std::uint64_t;
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return next_u64(); }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    (void)splitmix64(s);
    return splitmix64(s);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rfg
