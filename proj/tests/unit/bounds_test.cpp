#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperclique/bounds.hpp"
#include "hyperclique/errors.hpp"

using namespace hyperclique;

TEST(Bounds, ClosedForms) {
  EXPECT_DOUBLE_EQ(theorem1_bound(0.75), 0.25);
  EXPECT_DOUBLE_EQ(chordal_bound(0.75), 0.5);
  EXPECT_DOUBLE_EQ(kalai_bound(0.75, 1), 0.5);
  EXPECT_DOUBLE_EQ(kalai_bound(0.875, 2), 0.5);
  EXPECT_DOUBLE_EQ(theorem1_bound(0.0), 0.0);
  EXPECT_DOUBLE_EQ(theorem1_bound(1.0), 1.0);
  EXPECT_NEAR(beta_recursion(0.5, 2, 2), 1.0 / 9216.0, 1e-18);
  EXPECT_EQ(asymptotic_exponent(2, 3), 4u);
  EXPECT_EQ(asymptotic_exponent(3, 3), 9u);
  EXPECT_EQ(asymptotic_exponent(2, 2), 2u);
}

TEST(Bounds, BetaRecursionUnrolls) {
  // alpha_1 = (alpha/(12km))^k, alpha_{i} = (alpha_{i-1}/(12km))^k, beta = alpha_{m-1}.
  const double a = 0.9;
  const double c = 12.0 * 3 * 4;
  const double a1 = std::pow(a / c, 3);
  const double a2 = std::pow(a1 / c, 3);
  const double a3 = std::pow(a2 / c, 3);
  EXPECT_DOUBLE_EQ(beta_recursion(a, 3, 4), a3);
}

TEST(Bounds, RejectsOutOfRange) {
  EXPECT_THROW(theorem1_bound(-0.1), ArgumentError);
  EXPECT_THROW(chordal_bound(1.5), ArgumentError);
  EXPECT_THROW(kalai_bound(0.5, 0), ArgumentError);
  EXPECT_THROW(beta_recursion(0.0, 2, 2), ArgumentError);
  EXPECT_THROW(beta_recursion(0.5, 3, 2), ArgumentError);
  EXPECT_THROW(asymptotic_exponent(10, 40), ArgumentError);
}

TEST(Bounds, MissingEdgeLowerBound) {
  // C(m,k)^-1 * C((s - omega)/k, k)
  EXPECT_DOUBLE_EQ(lemma31_lower_bound(8, 2, 3, 3), 2.0 * 1.0 * 0.0 / 6.0);
  EXPECT_DOUBLE_EQ(lemma31_lower_bound(14, 2, 3, 3), 4.0 * 3.0 * 2.0 / 6.0);
  EXPECT_DOUBLE_EQ(lemma31_lower_bound(12, 2, 2, 3), (5.0 * 4.0 / 2.0) / 3.0);
  EXPECT_DOUBLE_EQ(lemma31_lower_bound(3, 5, 3, 3), 0.0);
}

TEST(Bounds, Report) {
  const auto r = bound_report(Density(3, 4), 2, 2, 1);
  EXPECT_DOUBLE_EQ(r.theorem1, 0.25);
  EXPECT_DOUBLE_EQ(r.chordal, 0.5);
  EXPECT_DOUBLE_EQ(r.kalai, 0.5);
  EXPECT_EQ(r.exponent, 2u);
}

TEST(ExactComparisons, TightBoundaries) {
  EXPECT_TRUE(meets_theorem1(Density(3, 4), Density(1, 4)));
  EXPECT_FALSE(meets_theorem1(Density(3, 4), Density(249999, 1000000)));
  EXPECT_TRUE(meets_chordal(Density(3, 4), Density(1, 2)));
  EXPECT_FALSE(meets_chordal(Density(3, 4), Density(499999, 1000000)));
  EXPECT_TRUE(meets_kalai(Density(7, 8), Density(1, 2), 2));
  EXPECT_FALSE(meets_kalai(Density(7, 8), Density(4999999, 10000000), 2));
  EXPECT_TRUE(meets_kalai(Density(0, 1), Density(0, 1), 3));
  EXPECT_TRUE(meets_theorem1(Density(1, 1), Density(1, 1)));
  EXPECT_FALSE(meets_theorem1(Density(1, 1), Density(99, 100)));
}

TEST(ExactComparisons, AgreeWithLongDoubleAwayFromTies) {
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const std::uint64_t q = 1 + rng() % 500, b = 1 + rng() % 500;
    const Density alpha(rng() % (q + 1), q), ratio(rng() % (b + 1), b);
    const long double a = static_cast<long double>(alpha.numerator()) / alpha.denominator();
    const long double r = static_cast<long double>(ratio.numerator()) / ratio.denominator();
    const int d = 1 + static_cast<int>(rng() % 3);
    const long double t1 = std::pow(1 - std::sqrt(1 - a), 2), ch = 1 - std::sqrt(1 - a),
                      ka = 1 - std::pow(1 - a, 1.0L / (d + 1));
    if (std::fabs(r - t1) > 1e-12L) {
      EXPECT_EQ(meets_theorem1(alpha, ratio), r >= t1);
      ++compared;
    }
    if (std::fabs(r - ch) > 1e-12L) EXPECT_EQ(meets_chordal(alpha, ratio), r >= ch);
    if (std::fabs(r - ka) > 1e-12L) EXPECT_EQ(meets_kalai(alpha, ratio, d), r >= ka);
  }
  EXPECT_GT(compared, 19000);
}
