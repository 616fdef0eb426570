#pragma once

#include <cstdint>
#include <limits>

namespace hominf {

/// SplitMix64 output finalizer (Steele, Lea and Flood 2014).
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based SplitMix64 generator.
///
/// The i-th output is mix64(key + i * golden_gamma), so the whole stream is a
/// pure function of the key. Every stochastic routine in the library takes a
/// 64-bit seed and builds one of these from it; there is no global RNG state.
/// Satisfies the UniformRandomBitGenerator requirements.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : key_(seed) {}

  constexpr result_type operator()() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGoldenGamma);
  }

  [[nodiscard]] constexpr std::uint64_t key() const noexcept { return key_; }
  [[nodiscard]] constexpr std::uint64_t counter() const noexcept { return counter_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Seed of the substream identified by (master seed, trial index, tag).
///
/// Trials of a Monte Carlo run draw from substream_seed(master, t, tag), so
/// results do not depend on the order in which trials are executed.
[[nodiscard]] std::uint64_t substream_seed(std::uint64_t master_seed,
                                           std::uint64_t trial_index,
                                           std::uint64_t tag) noexcept;

}  // namespace hominf
