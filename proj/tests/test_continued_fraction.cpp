#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace minkdim;

namespace {

ContinuedFraction cf(std::vector<Digit> d) { return ContinuedFraction::finite(std::move(d)); }

}  // namespace

TEST(CfFromRational, Examples) {
  EXPECT_EQ(cf_from_rational(1, 2), cf({2}));
  EXPECT_EQ(cf_from_rational(1, 1), cf({1}));
  EXPECT_EQ(cf_from_rational(3, 7), cf({2, 3}));
  EXPECT_EQ(cf({2, 3}).preperiod(), oracle::euclid_digits(3, 7));
  // not in lowest terms
  EXPECT_EQ(cf_from_rational(6, 14), cf({2, 3}));
}

TEST(CfFromRational, RejectsOutsideUnitInterval) {
  EXPECT_THROW(cf_from_rational(0, 1), minkdim::invalid_argument);
  EXPECT_THROW(cf_from_rational(3, 2), minkdim::invalid_argument);
  EXPECT_THROW(cf_from_rational(1, 0), minkdim::invalid_argument);
  EXPECT_THROW(cf_from_rational(-1, 2), minkdim::invalid_argument);
}

TEST(CfValue, Examples) {
  EXPECT_EQ(cf_value(cf({2})), Rational(1, 2));
  EXPECT_EQ(cf_value(cf({1, 2})), Rational(2, 3));
  EXPECT_EQ(cf_value(cf({2, 3})), Rational(3, 7));
  EXPECT_THROW(cf_value(ContinuedFraction::periodic({}, {1})), minkdim::invalid_argument);
}

TEST(CfValue, RoundTripAllSmallDenominators) {
  for (std::int64_t q = 1; q <= 300; ++q) {
    for (std::int64_t p = 1; p <= q; ++p) {
      auto c = cf_from_rational(p, q);
      ASSERT_TRUE(c.is_canonical());
      ASSERT_EQ(cf_value(c), Rational(p, q));
      ASSERT_EQ(oracle::cf_value_backward(c.preperiod()), Rational(p, q));
    }
  }
}

TEST(CfValue, RoundTripRandomDenominatorsTo10000) {
  auto& gen = oracle::rng();
  std::uniform_int_distribution<std::int64_t> qd(1, 10000);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t q = qd(gen);
    std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, q)(gen);
    auto c = cf_from_rational(p, q);
    ASSERT_EQ(cf_value(c), Rational(p, q));
    ASSERT_EQ(c.preperiod(), oracle::euclid_digits(p, q));
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(cf({1, 1})), cf({2}));
  EXPECT_EQ(canonicalize(cf({2})), cf({2}));
  EXPECT_EQ(canonicalize(cf({2, 1})), cf({3}));
  EXPECT_EQ(canonicalize(cf({1})), cf({1}));
  EXPECT_EQ(cf_value(cf({2, 1})), cf_value(cf({3})));
}

TEST(Canonicalize, PreservesValueOnRandomWords) {
  auto& gen = oracle::rng();
  std::uniform_int_distribution<Digit> dd(1, 6);
  std::uniform_int_distribution<std::size_t> ld(1, 12);
  for (int i = 0; i < 500; ++i) {
    std::vector<Digit> w(ld(gen));
    for (auto& d : w) d = dd(gen);
    auto c = cf(w);
    auto canon = canonicalize(c);
    ASSERT_TRUE(canon.is_canonical());
    ASSERT_EQ(cf_value(canon), cf_value(c));
  }
}

TEST(AlternateForm, GivesOtherRepresentation) {
  EXPECT_EQ(alternate_form(cf({2})), cf({1, 1}));
  EXPECT_EQ(alternate_form(cf({1, 1})), cf({2}));
  EXPECT_EQ(alternate_form(cf({2, 3})), cf({2, 2, 1}));
  EXPECT_FALSE(alternate_form(cf({1})).has_value());
}

TEST(ContinuedFractionType, RejectsZeroDigitsAndEmpty) {
  EXPECT_THROW(cf({0}), minkdim::invalid_argument);
  EXPECT_THROW(cf({}), minkdim::invalid_argument);
  EXPECT_THROW(ContinuedFraction::periodic({1}, {}), minkdim::invalid_argument);
  EXPECT_THROW(ContinuedFraction::periodic({}, {2, 0}), minkdim::invalid_argument);
}

TEST(ContinuedFractionType, PeriodIsPrimitiveAndPreperiodAbsorbed) {
  auto a = ContinuedFraction::periodic({}, {1, 2, 1, 2});
  EXPECT_EQ(a.period(), (std::vector<Digit>{1, 2}));
  auto b = ContinuedFraction::periodic({1}, {2, 1});
  EXPECT_TRUE(b.preperiod().empty());
  EXPECT_EQ(b.period(), (std::vector<Digit>{1, 2}));
  EXPECT_EQ(b, a);
  auto c = ContinuedFraction::periodic({3, 1, 1}, {1});
  EXPECT_EQ(c.preperiod(), (std::vector<Digit>{3}));
  EXPECT_EQ(c.unrolled(5), (std::vector<Digit>{3, 1, 1, 1, 1}));
  EXPECT_EQ(c.to_string(), "[0; 3, (1)]");
}

TEST(Convergents, Examples) {
  auto c = convergents(cf({2, 3}), 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (std::pair<BigInt, BigInt>{1, 2}));
  EXPECT_EQ(c[1], (std::pair<BigInt, BigInt>{3, 7}));

  auto one = convergents(cf({1}), 1);
  EXPECT_EQ(one[0], (std::pair<BigInt, BigInt>{1, 1}));

  auto fib = convergents(ContinuedFraction::periodic({}, {1}), 4);
  std::vector<std::pair<BigInt, BigInt>> expect{{1, 1}, {1, 2}, {2, 3}, {3, 5}};
  EXPECT_EQ(fib, expect);

  EXPECT_THROW(convergents(cf({2, 3}), 3), minkdim::invalid_argument);
}

TEST(Convergents, LowestTermsAndIncreasingDenominators) {
  auto c = convergents(ContinuedFraction::periodic({4}, {1, 7, 2}), 30);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(boost::multiprecision::gcd(c[i].first, c[i].second), 1);
    if (i > 0) {
      EXPECT_LT(c[i - 1].second, c[i].second);
    }
  }
}

TEST(CylinderInterval, Examples) {
  std::vector<Digit> w2{2}, w1{1}, w11{1, 1};
  auto a = cylinder_interval(w2);
  EXPECT_EQ(a.lo, Rational(1, 3));
  EXPECT_EQ(a.hi, Rational(1, 2));
  EXPECT_EQ(a.length(), Rational(1, 6));
  auto b = cylinder_interval(w1);
  EXPECT_EQ(b.lo, Rational(1, 2));
  EXPECT_EQ(b.hi, Rational(1));
  auto c = cylinder_interval(w11);
  EXPECT_EQ(c.lo, Rational(1, 2));
  EXPECT_EQ(c.hi, Rational(2, 3));
  EXPECT_EQ(c.length(), Rational(1, 6));
  EXPECT_THROW(cylinder_interval(std::vector<Digit>{}), minkdim::invalid_argument);
}

TEST(CylinderInterval, LengthLawSampledToDepthEight) {
  auto& gen = oracle::rng();
  auto k = DigitSet::range(1, 9);
  for (int i = 0; i < 400; ++i) {
    auto w = oracle::random_word(gen, k, 8, 1);
    auto [q, q_prev] = oracle::denominators(w);
    auto iv = cylinder_interval(w);
    ASSERT_EQ(iv.length(), Rational(1, BigInt(q) * (q + q_prev)));
    // points with the prefix lie inside: both endpoints are such limits
    auto deeper = w;
    deeper.push_back(3);
    ASSERT_TRUE(iv.contains(oracle::cf_value_backward(deeper)));
  }
}

TEST(CylinderInterval, NestingAndSiblingDisjointness) {
  auto& gen = oracle::rng();
  auto k = DigitSet::range(1, 9);
  for (int i = 0; i < 200; ++i) {
    auto w = oracle::random_word(gen, k, 6, 1);
    auto parent = cylinder_interval(w);
    std::vector<RationalInterval> kids;
    for (Digit d : k) {
      auto child = w;
      child.push_back(d);
      kids.push_back(cylinder_interval(child));
      ASSERT_TRUE(parent.contains(kids.back()));
    }
    for (std::size_t a = 0; a < kids.size(); ++a)
      for (std::size_t b = a + 1; b < kids.size(); ++b)
        ASSERT_TRUE(kids[a].interior_disjoint(kids[b]));
  }
}

TEST(DigitSetType, Validation) {
  EXPECT_THROW(DigitSet({1, 1}), minkdim::invalid_argument);
  EXPECT_THROW(DigitSet({3}), minkdim::invalid_argument);
  EXPECT_THROW(DigitSet({0, 2}), minkdim::invalid_argument);
  DigitSet k({5, 2, 9});
  EXPECT_EQ(k.min(), 2u);
  EXPECT_EQ(k.max(), 9u);
  EXPECT_TRUE(k.contains(5));
  EXPECT_FALSE(k.contains(3));
  EXPECT_EQ(k.scaled(3), DigitSet({6, 15, 27}));
}

TEST(EnumerateCylinders, CountsAndOrder) {
  EXPECT_EQ(enumerate_cylinders(DigitSet({1, 2}), 1).size(), 2u);
  auto all = enumerate_cylinders(DigitSet::range(1, 9), 2);
  ASSERT_EQ(all.size(), 81u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                             [](const Cylinder& a, const Cylinder& b) { return a.prefix < b.prefix; }));
  for (const auto& c : all) EXPECT_EQ(c.interval, cylinder_interval(c.prefix));
}

TEST(EnumerateCylinders, TwoDigitDepthTwoLengths) {
  auto cyl = enumerate_cylinders(DigitSet({1, 2}), 2);
  ASSERT_EQ(cyl.size(), 4u);
  // [1,1] 1/(2*3), [1,2] 1/(3*4), [2,1] 1/(3*5), [2,2] 1/(5*7)
  std::vector<Rational> expect{Rational(1, 6), Rational(1, 12), Rational(1, 15), Rational(1, 35)};
  Rational total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(cyl[i].interval.length(), expect[i]);
    total += cyl[i].interval.length();
  }
  EXPECT_EQ(total, Rational(29, 84));
  EXPECT_LT(total, 1);
}

TEST(EnumerateCylinders, DisjointAndNestedAtDepthThree) {
  DigitSet k({1, 3, 4});
  auto level2 = enumerate_cylinders(k, 2);
  auto level3 = enumerate_cylinders(k, 3);
  for (std::size_t i = 0; i < level3.size(); ++i) {
    const auto& parent = level2[i / k.size()];
    EXPECT_TRUE(parent.interval.contains(level3[i].interval));
    for (std::size_t j = i + 1; j < level3.size(); ++j)
      EXPECT_TRUE(level3[i].interval.interior_disjoint(level3[j].interval));
  }
}

TEST(EnumerateCylinders, BudgetExceeded) {
  EXPECT_THROW(enumerate_cylinders(DigitSet::range(1, 9), 3, 700), minkdim::budget_exceeded);
  EXPECT_NO_THROW(enumerate_cylinders(DigitSet::range(1, 9), 3, 729));
  EXPECT_THROW(enumerate_cylinders(DigitSet::range(1, 9), 0), minkdim::invalid_argument);
  EXPECT_THROW(checked_cylinder_count(9, 100, default_cylinder_budget), minkdim::budget_exceeded);
}
