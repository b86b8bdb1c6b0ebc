#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace matroid_id;

TEST(Properties, SubsetsOfIndependentSetsAreIndependent) {
  auto r = props::monotonicity(100000, 3);
  EXPECT_EQ(r.draws, 100000u);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Properties, NumericScreenIsSound) {
  auto [sound, rate] = props::screen_soundness(100000, 4, 1000);
  EXPECT_EQ(sound.violations, 0u);
  ASSERT_GT(rate.draws, 10000u);
  EXPECT_LE(double(rate.false_dependent), 2 * rate.expected_bound);
}

TEST(Properties, SmallSampleSetsExposeFalseDependencies) {
  // with |E| = 3 rank drops are common but still within the bound
  auto [sound, rate] = props::screen_soundness(20000, 5, 3);
  EXPECT_EQ(sound.violations, 0u);
  EXPECT_GT(rate.false_dependent, 0u);
  EXPECT_LE(double(rate.false_dependent), 2 * rate.expected_bound);
}

TEST(Properties, ExchangeAxiom) {
  auto r = props::exchange(60, 6);
  EXPECT_GT(r.draws, 1000u);
  EXPECT_EQ(r.violations, 0u);
}
