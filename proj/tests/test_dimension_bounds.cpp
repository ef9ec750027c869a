#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace minkdim;

TEST(JarnikBounds, NineMatchesPublishedValues) {
  auto b = jarnik_bounds(9);
  EXPECT_NEAR(b.lower, 0.6308969, 1e-7);
  EXPECT_NEAR(b.upper, 0.985445112, 1e-7);
  EXPECT_EQ(b.n, 9u);
  // the natural and base-2 readings of "lg" do not reproduce the printed upper bound
  EXPECT_GT(std::fabs((1 - 1 / (72 * std::log2(9.0))) - 0.985445112), 1e-3);
}

TEST(JarnikBounds, DirectFormula) {
  auto b10 = jarnik_bounds(10);
  EXPECT_NEAR(b10.lower, 1 - 1 / (10 * 0.30102999566398120), 1e-9);
  EXPECT_NEAR(b10.lower, 0.6678071905, 1e-9);
  EXPECT_NEAR(b10.upper, 1 - 1 / 80.0, 1e-9);  // log10(10) = 1
  EXPECT_NEAR(jarnik_bounds(100).lower, 0.96678, 1e-5);
}

TEST(JarnikBounds, RejectsSmallN) {
  EXPECT_THROW(jarnik_bounds(8), minkdim::invalid_argument);
  EXPECT_THROW(jarnik_bounds(0), minkdim::invalid_argument);
}

TEST(JarnikBounds, OrderedAndIncreasing) {
  BoundsInterval prev = jarnik_bounds(9);
  for (unsigned n = 9; n <= 500; ++n) {
    auto b = jarnik_bounds(n);
    ASSERT_GT(b.lower, 0);
    ASSERT_LT(b.lower, b.upper);
    ASSERT_LT(b.upper, 1);
    if (n > 9) {
      ASSERT_GT(b.lower, prev.lower);
      ASSERT_GT(b.upper, prev.upper);
    }
    prev = b;
  }
}

TEST(PreservationVerdict, NineIsNotPreserved) {
  auto v = preservation_verdict(9);
  EXPECT_EQ(v.preserved, Preservation::NotPreserved);
  EXPECT_GE(v.certified_gap, 0.013);
  // the printed upper bound 0.985445112 is 4e-9 below the formula's value
  EXPECT_NEAR(v.certified_gap, oracle::moran_1_to_9 - (1 - 1 / (72 * std::log10(9.0))), 1e-12);
  EXPECT_NEAR(v.certified_gap, 0.0131327464, 1e-10);
  EXPECT_NEAR(v.image_dimension.s.convert_to<double>(), oracle::moran_1_to_9, 1e-12);
}

TEST(PreservationVerdict, WideToleranceIsInconclusive) {
  EXPECT_EQ(preservation_verdict(9, 0.5).preserved, Preservation::Inconclusive);
}

TEST(PreservationVerdict, TwelveComputedFromBothFormulas) {
  auto v = preservation_verdict(12);
  double upper = 1 - 1 / (96 * std::log10(12.0));
  EXPECT_NEAR(v.bounds.upper, upper, 1e-12);
  EXPECT_NEAR(v.image_dimension.s.convert_to<double>(), oracle::moran_1_to_12, 1e-12);
  EXPECT_EQ(v.preserved, Preservation::NotPreserved);
}

TEST(PreservationVerdict, SoundnessAcrossN) {
  for (unsigned n = 9; n <= 40; ++n) {
    for (double tol : {1e-9, 1e-6, 1e-3, 1e-2}) {
      auto v = preservation_verdict(n, tol);
      double s = v.image_dimension.s.convert_to<double>();
      bool outside = s - tol > v.bounds.upper || s + tol < v.bounds.lower;
      if (v.preserved == Preservation::NotPreserved) {
        ASSERT_TRUE(outside);
        ASSERT_GE(v.certified_gap, tol);
      } else {
        ASSERT_FALSE(outside && v.certified_gap >= tol);
      }
    }
  }
  EXPECT_THROW(preservation_verdict(8), minkdim::invalid_argument);
}
