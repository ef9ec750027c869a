#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace minkdim;

namespace {

double d(long double x) { return static_cast<double>(x); }

// Root of sum_i len_i^s = 1 by plain bisection on doubles.
double bisect_covering_root(const std::vector<double>& lengths) {
  double lo = 0, hi = 1;
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2, sum = 0;
    for (double l : lengths) sum += std::pow(l, mid);
    (sum > 1 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

TEST(PairwiseSum, MatchesSerialOnExactValues) {
  std::vector<long double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long double>(i);
  EXPECT_EQ(pairwise_sum(v), 499500.0L);
  EXPECT_EQ(pairwise_sum(std::span<const long double>{}), 0.0L);
}

TEST(CoveringDomain, TwoDigitsDepthOne) {
  auto e = covering_root_domain(DigitSet({1, 2}), 1);
  EXPECT_NEAR(d(e.s_hat), 0.6010, 1e-3);
  EXPECT_NEAR(d(e.s_hat), bisect_covering_root({1.0 / 2, 1.0 / 6}), 1e-12);
  EXPECT_NEAR(d(e.s_hat), oracle::domain_12_depth1, 1e-12);
  EXPECT_EQ(e.cylinder_count, 2u);
  EXPECT_EQ(e.side, Side::Domain);
  EXPECT_LE(std::fabs(d(e.sum_at_root) - 1), 1e-12);
}

TEST(CoveringDomain, TwoDigitsDepthTwoAndSix) {
  auto e2 = covering_root_domain(DigitSet({1, 2}), 2);
  EXPECT_NEAR(d(e2.s_hat), bisect_covering_root({1.0 / 6, 1.0 / 12, 1.0 / 15, 1.0 / 35}), 1e-12);
  EXPECT_NEAR(d(e2.s_hat), oracle::domain_12_depth2, 1e-12);
  auto e6 = covering_root_domain(DigitSet({1, 2}), 6);
  EXPECT_NEAR(d(e6.s_hat), oracle::domain_12_depth6, 1e-10);
  EXPECT_EQ(e6.cylinder_count, 64u);
}

TEST(CoveringDomain, NineDigitsInsideBounds) {
  auto b = jarnik_bounds(9);
  const double frozen[] = {oracle::domain_19_depth3, oracle::domain_19_depth4};
  for (std::size_t depth = 3; depth <= 4; ++depth) {
    auto e = covering_root_domain(DigitSet::range(1, 9), depth);
    EXPECT_GT(d(e.s_hat), b.lower);
    EXPECT_LT(d(e.s_hat), b.upper);
    EXPECT_NEAR(d(e.s_hat), frozen[depth - 3], 1e-10);
  }
}

TEST(CoveringDomain, SumOfLengthsBelowOneAndDecreasing) {
  DigitSet k({1, 2, 3});
  Rational prev = 1;
  for (std::size_t depth = 1; depth <= 6; ++depth) {
    Rational total = 0;
    for_each_cylinder(k, depth,
                      [&](std::span<const Digit>, const RationalInterval& iv) { total += iv.length(); });
    ASSERT_LT(total, prev);
    prev = total;
  }
}

TEST(CoveringDomain, BracketStraddlesRoot) {
  auto e = covering_root_domain(DigitSet({1, 4, 6}), 4);
  EXPECT_LT(e.bracket_lo, e.s_hat);
  EXPECT_GT(e.bracket_hi, e.s_hat);
  EXPECT_THROW(covering_root_domain(DigitSet::range(1, 9), 4, 1e-12L, 1000), minkdim::budget_exceeded);
}

TEST(CoveringImage, EqualsMoranRootAtEveryDepth) {
  auto& gen = oracle::rng();
  for (int i = 0; i < 6; ++i) {
    auto k = oracle::random_digit_set(gen, 8, 3);
    double moran = moran_root(k).s.convert_to<double>();
    for (std::size_t depth = 1; depth <= 6; ++depth) {
      auto e = covering_root_image(k, depth);
      ASSERT_NEAR(d(e.s_hat), moran, 1e-11) << k.to_string() << " depth " << depth;
    }
  }
  auto e = covering_root_image(DigitSet::range(1, 9), 3);
  EXPECT_NEAR(d(e.s_hat), 0.9985778625536, 1e-8);
}

TEST(CoveringImage, TwoDigitsDepthSixMatchesEnumeratedProducts) {
  std::vector<double> lengths;
  for (int mask = 0; mask < 64; ++mask) {
    int total = 0;
    for (int b = 0; b < 6; ++b) total += (mask >> b & 1) ? 2 : 1;
    lengths.push_back(std::ldexp(1.0, -total));
  }
  auto e = covering_root_image(DigitSet({1, 2}), 6);
  EXPECT_NEAR(d(e.s_hat), bisect_covering_root(lengths), 1e-12);
  EXPECT_NEAR(d(e.s_hat), oracle::moran_1_2, 1e-12);
}

TEST(EstimateSeries, DomainConvergesForTwoDigits) {
  auto s = estimate_series(DigitSet({1, 2}), 1, 6, Side::Domain);
  ASSERT_EQ(s.estimates.size(), 6u);
  ASSERT_EQ(s.differences.size(), 5u);
  EXPECT_TRUE(s.monotone_nonincreasing);
  // the step from depth 3 to 4 is larger than the one from 2 to 3
  EXPECT_FALSE(s.differences_shrinking);
  EXPECT_TRUE(estimate_series(DigitSet({1, 2}), 3, 8, Side::Domain).differences_shrinking);
}

TEST(EstimateSeries, ImageIsConstant) {
  auto s = estimate_series(DigitSet({1, 2}), 1, 6, Side::Image);
  for (const auto& e : s.estimates) EXPECT_NEAR(d(e.s_hat), oracle::moran_1_2, 1e-11);
  for (long double diff : s.differences) EXPECT_LT(std::fabs(d(diff)), 1e-11);
}

TEST(EstimateSeries, NineDigitsDepthsThreeToFourWithinBounds) {
  auto b = jarnik_bounds(9);
  auto s = estimate_series(DigitSet::range(1, 9), 3, 4, Side::Domain);
  for (const auto& e : s.estimates) {
    EXPECT_GT(d(e.s_hat), b.lower);
    EXPECT_LT(d(e.s_hat), b.upper);
  }
}

TEST(EstimateSeries, RejectsBadRangesAndBudget) {
  EXPECT_THROW(estimate_series(DigitSet({1, 2}), 0, 3, Side::Domain), minkdim::invalid_argument);
  EXPECT_THROW(estimate_series(DigitSet({1, 2}), 4, 3, Side::Domain), minkdim::invalid_argument);
  EXPECT_THROW(estimate_series(DigitSet::range(1, 9), 1, 9, Side::Domain), minkdim::budget_exceeded);
}

TEST(CoveringDomain, Deterministic) {
  auto a = covering_root_domain(DigitSet({1, 2, 5}), 5);
  auto b = covering_root_domain(DigitSet({1, 2, 5}), 5);
  EXPECT_EQ(a.s_hat, b.s_hat);
  EXPECT_EQ(a.sum_at_root, b.sum_at_root);
}
