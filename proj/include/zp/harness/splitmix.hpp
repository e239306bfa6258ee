#pragma once

#include <cstdint>
#include <limits>

namespace zp::harness {

/// SplitMix64 (Steele, Lea, Flood). The state advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15 and each output is finalized with the
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  /// Stream for partition `index` of a run seeded with `seed`.
  static SplitMix64 for_partition(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(seed + (index + 1) * kGamma);
  }

  std::uint64_t operator()() noexcept {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Value in [0, n). Modulo reduction; the bias is below n / 2^64.
  std::uint64_t below(std::uint64_t n) noexcept { return (*this)() % n; }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return std::numeric_limits<std::uint64_t>::max(); }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t state_;
};

}  // namespace zp::harness
