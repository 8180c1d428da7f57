#pragma once

#include <cstdint>
#include <random>

namespace tabu {

/// Seeded random stream with a fixed uniform mapping.
///
/// The mt19937_64 output sequence is pinned by the standard; the double
/// mapping below avoids std::uniform_real_distribution, whose output is
/// implementation defined. Equal seeds therefore give bitwise-equal
/// samples on any conforming toolchain.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo bias is irrelevant at the call sites (n is
    // tiny against 2^64), but use Lemire's trick anyway.
    unsigned __int128 m = static_cast<unsigned __int128>(gen_()) * n;
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tabu
