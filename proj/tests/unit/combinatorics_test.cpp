#include <gtest/gtest.h>

#include <set>

#include "hyperclique/combinatorics.hpp"
#include "hyperclique/errors.hpp"

using namespace hyperclique;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(9, 3), 84u);
  EXPECT_EQ(binomial(40, 20), 137846528820u);
  EXPECT_EQ(binomial(3, 5), 0u);
}

TEST(Binomial, Saturates) {
  EXPECT_EQ(binomial(200, 100), kSaturated);
  EXPECT_EQ(binomial(67, 33), 14226520737620288370u);
}

TEST(ExtBinom, AgreesWithBinomialOnIntegers) {
  for (int k = 1; k <= 5; ++k)
    for (int x = 0; x <= 12; ++x)
      EXPECT_DOUBLE_EQ(ext_binom(x, k), static_cast<double>(binomial(x, k))) << x << " " << k;
}

TEST(ExtBinom, ZeroBelowThreshold) {
  EXPECT_EQ(ext_binom(0.5, 3), 0.0);
  EXPECT_EQ(ext_binom(1.99, 3), 0.0);
  EXPECT_EQ(ext_binom(-4.0, 2), 0.0);
  // Between k-1 and k the polynomial is still nonnegative: x(x-1)(x-2)/6 at 2.5.
  EXPECT_DOUBLE_EQ(ext_binom(2.5, 3), 2.5 * 1.5 * 0.5 / 6.0);
  EXPECT_THROW(ext_binom(3.0, 0), ArgumentError);
}

TEST(ExtBinom, ConvexOnGrid) {
  for (int k = 1; k <= 4; ++k)
    for (double x = -2.0; x < 10.0; x += 0.25) {
      const double mid = ext_binom(x + 0.25, k);
      EXPECT_LE(2 * mid, ext_binom(x, k) + ext_binom(x + 0.5, k) + 1e-9) << x << " " << k;
    }
}

TEST(Combinations, LexicographicAndComplete) {
  std::vector<Subset> seen;
  for_each_combination(std::size_t{6}, 3, [&](std::span<const Vertex> s) {
    seen.emplace_back(s.begin(), s.end());
  });
  ASSERT_EQ(seen.size(), 20u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::set<Subset>(seen.begin(), seen.end()).size(), 20u);
  EXPECT_EQ(seen.front(), (Subset{0, 1, 2}));
  EXPECT_EQ(seen.back(), (Subset{3, 4, 5}));
}

TEST(Combinations, EdgeCases) {
  int calls = 0;
  for_each_combination(std::size_t{4}, 0, [&](std::span<const Vertex> s) {
    EXPECT_TRUE(s.empty());
    ++calls;
  });
  EXPECT_EQ(calls, 1);
  calls = 0;
  for_each_combination(std::size_t{2}, 3, [&](std::span<const Vertex>) { ++calls; });
  EXPECT_EQ(calls, 0);
}

TEST(Combinations, EarlyStop) {
  int calls = 0;
  const bool finished = for_each_combination(std::size_t{6}, 2, [&](std::span<const Vertex>) {
    return ++calls < 4;
  });
  EXPECT_FALSE(finished);
  EXPECT_EQ(calls, 4);
}

TEST(Combinations, OverPool) {
  const Subset pool{2, 5, 9};
  std::vector<Subset> seen;
  for_each_combination(std::span<const Vertex>(pool), 2, [&](std::span<const Vertex> s) {
    seen.emplace_back(s.begin(), s.end());
  });
  EXPECT_EQ(seen, (std::vector<Subset>{{2, 5}, {2, 9}, {5, 9}}));
}

TEST(SubsetHelpers, Basics) {
  EXPECT_TRUE(is_canonical(Subset{0, 2, 7}));
  EXPECT_FALSE(is_canonical(Subset{0, 2, 2}));
  EXPECT_FALSE(is_canonical(Subset{3, 1}));
  EXPECT_TRUE(disjoint(Subset{0, 2}, Subset{1, 3}));
  EXPECT_FALSE(disjoint(Subset{0, 2}, Subset{2, 3}));
  EXPECT_TRUE(includes(Subset{0, 1, 4}, Subset{0, 4}));
  EXPECT_FALSE(includes(Subset{0, 1, 4}, Subset{2}));
  EXPECT_EQ(with_vertex(Subset{1, 5}, 3), (Subset{1, 3, 5}));
  EXPECT_EQ(without_position(Subset{1, 3, 5}, 1), (Subset{1, 5}));
  EXPECT_EQ(iota_subset(3), (Subset{0, 1, 2}));
}

class RankerTest : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(RankerTest, RankIsBijection) {
  const auto [n, k] = GetParam();
  SubsetRanker ranker(n, k);
  EXPECT_EQ(ranker.count(), binomial(n, k));
  std::set<std::uint64_t> ranks;
  for_each_combination(static_cast<std::size_t>(n), k, [&](std::span<const Vertex> s) {
    const auto r = ranker.rank(s);
    EXPECT_LT(r, ranker.count());
    EXPECT_EQ(ranker.unrank(r), Subset(s.begin(), s.end()));
    ranks.insert(r);
  });
  EXPECT_EQ(ranks.size(), ranker.count());
}

INSTANTIATE_TEST_SUITE_P(Shapes, RankerTest,
                         ::testing::Values(std::pair{5, 1}, std::pair{6, 2}, std::pair{9, 3},
                                           std::pair{10, 5}, std::pair{12, 12}, std::pair{7, 0}));

TEST(Ranker, RefusesOverflow) {
  EXPECT_THROW(SubsetRanker(200, 100), SizeRefusal);
}
