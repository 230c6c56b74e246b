#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pluq/errors.hpp"
#include "pluq/matgen.hpp"
#include "pluq/rank_oracle.hpp"

namespace pluq {
namespace {

TEST(SplitMix64, KnownSequence) {
  // Reference values of the standard SplitMix64 generator seeded with 0.
  SplitMix64 g(0);
  EXPECT_EQ(g(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(g(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(g(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, BelowStaysInRangeAndCoversIt) {
  SplitMix64 g(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = g.below(13);
    ASSERT_LT(x, 13u);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 13u);
  const PrimeField f(7);
  for (int i = 0; i < 200; ++i) EXPECT_FALSE(g.nonzero_element(f).is_zero());
}

TEST(RandomRsubperm, ShapesAndErrors) {
  EXPECT_EQ(random_rsubperm(4, 5, 0, 1).rank(), 0u);
  const auto full = random_rsubperm(6, 6, 6, 3);
  EXPECT_EQ(full.row_support().size(), 6u);
  EXPECT_EQ(full.col_support().size(), 6u);
  EXPECT_THROW(random_rsubperm(3, 5, 4, 1), InvalidArgument);
  EXPECT_EQ(random_rsubperm(4, 4, 2, 99), random_rsubperm(4, 4, 2, 99));
}

TEST(RandomRsubperm, PlacementsAreSpread) {
  // Over many seeds every cell of a 3x3 grid hosts a single pivot.
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto sp = random_rsubperm(3, 3, 1, s);
    for (const Pivot& p : sp.pivots()) cells.insert({p.row, p.col});
  }
  EXPECT_EQ(cells.size(), 9u);
}

TEST(RandomRpmMatrix, RankAndDeterminism) {
  testing::Gen gen(51);
  std::size_t planted_hits = 0, total = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = gen() % 12, n = gen() % 12;
    const std::size_t r = std::min(m, n) ? gen() % (std::min(m, n) + 1) : 0;
    const GenSpec spec{m, n, r, t % 2 ? 7u : kDefaultPrime, gen()};
    const auto a = random_rpm_matrix(spec);
    EXPECT_EQ(oracle::rank(a), r);
    EXPECT_EQ(random_rpm_matrix(spec), a);
    planted_hits += oracle::rank_profile_matrix(a) == random_rsubperm(m, n, r, spec.seed);
    ++total;
  }
  // Triangular factors preserve every leading-block rank, so the planted
  // pattern is always the rank profile matrix.
  RecordProperty("planted_rpm_rate", std::to_string(planted_hits) + "/" + std::to_string(total));
  EXPECT_EQ(planted_hits, total);
  EXPECT_TRUE(random_rpm_matrix({3, 4, 0, 7, 1}).is_zero());
}

}  // namespace
}  // namespace pluq
