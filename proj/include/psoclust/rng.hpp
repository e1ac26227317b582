#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace psoclust {

/// Seeded random stream with a platform-independent sample sequence.
///
/// std::mt19937_64's output is fixed by the standard, but the standard
/// distributions are not, so the conversions to U(0,1) and to bounded
/// integers are done here.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n);

  std::uint64_t seed() const { return seed_; }
  /// Number of 64-bit words consumed so far.
  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
};

inline std::size_t RngStream::uniform_index(std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  // Rejection sampling over the largest multiple of `bound`.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    ++draws_;
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

}  // namespace psoclust
