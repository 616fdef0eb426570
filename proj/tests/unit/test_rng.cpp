#include <gtest/gtest.h>

#include <set>

#include "hominf/rng.hpp"

namespace {

using hominf::SplitMix64;

TEST(SplitMix64, MatchesReferenceSequence) {
  // Reference values of the canonical SplitMix64 stream seeded with 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, IsAPureFunctionOfTheSeed) {
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a(), b());
  EXPECT_EQ(a.counter(), 100u);
}

TEST(Substreams, DistinctKeysGiveDistinctSeeds) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    for (std::uint64_t tag = 0; tag < 2; ++tag) seen.insert(hominf::substream_seed(7, t, tag));
  }
  EXPECT_EQ(seen.size(), 2000u);
  EXPECT_NE(hominf::substream_seed(7, 0, 0), hominf::substream_seed(8, 0, 0));
  EXPECT_EQ(hominf::substream_seed(7, 3, 1), hominf::substream_seed(7, 3, 1));
}

}  // namespace
