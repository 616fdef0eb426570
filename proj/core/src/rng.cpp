#include "hominf/rng.hpp"

namespace hominf {

std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t trial_index,
                             std::uint64_t tag) noexcept {
  std::uint64_t h = mix64(master_seed + SplitMix64::kGoldenGamma);
  h = mix64(h ^ mix64(trial_index + 2 * SplitMix64::kGoldenGamma));
  h = mix64(h ^ mix64(tag + 3 * SplitMix64::kGoldenGamma));
  return h;
}

}  // namespace hominf
