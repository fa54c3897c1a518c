#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "shc/error.hpp"
#include "shc/welch.hpp"

namespace shc {
namespace {

// Reference values from scipy.stats.ttest_ind(a, b, equal_var=False).

TEST(Welch, ShiftedIntegers) {
  const std::vector<double> a{1, 2, 3, 4, 5}, b{2, 3, 4, 5, 6};
  const auto r = welch_t_test(a, b);
  EXPECT_NEAR(r.t_statistic, -1.0, 1e-6);
  EXPECT_NEAR(r.degrees_of_freedom, 8.0, 1e-6);
  EXPECT_NEAR(r.p_value, 0.34659350708733416, 1e-6);
}

TEST(Welch, UnequalSizesAndVariances) {
  const std::vector<double> a{0.1, 0.5, 0.9, 1.3}, b{2.0, 2.2, 1.9, 2.5, 2.1, 3.0};
  const auto r = welch_t_test(a, b);
  EXPECT_NEAR(r.t_statistic, -5.156650367931587, 1e-6);
  EXPECT_NEAR(r.degrees_of_freedom, 5.439741610247642, 1e-6);
  EXPECT_NEAR(r.p_value, 0.0028123450679087693, 1e-6);
}

TEST(Welch, IdenticalSamples) {
  const std::vector<double> a{0.3, 0.7, 0.1, 0.9};
  const auto r = welch_t_test(a, a);
  EXPECT_EQ(r.t_statistic, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(Welch, WellSeparated) {
  const std::vector<double> a{0, 0.01, 0.02}, b{10, 10.01, 10.02};
  EXPECT_LT(welch_t_test(a, b).p_value, 1e-6);
}

TEST(Welch, SwapNegatesStatistic) {
  const std::vector<double> a{0.1, 0.5, 0.9, 1.3}, b{2.0, 2.2, 1.9, 2.5, 2.1, 3.0};
  const auto ab = welch_t_test(a, b);
  const auto ba = welch_t_test(b, a);
  EXPECT_DOUBLE_EQ(ab.t_statistic, -ba.t_statistic);
  EXPECT_DOUBLE_EQ(ab.p_value, ba.p_value);
  EXPECT_DOUBLE_EQ(ab.degrees_of_freedom, ba.degrees_of_freedom);
}

TEST(Welch, DegenerateSamples) {
  const std::vector<double> ones{1, 1, 1}, twos{2, 2};
  const auto same = welch_t_test(ones, ones);
  EXPECT_EQ(same.p_value, 1.0);
  EXPECT_EQ(same.t_statistic, 0.0);
  const auto differ = welch_t_test(ones, twos);
  EXPECT_EQ(differ.p_value, 0.0);
  EXPECT_TRUE(std::isinf(differ.t_statistic));
  EXPECT_GT(differ.degrees_of_freedom, 0.0);
}

TEST(Welch, TooFewObservations) {
  const std::vector<double> one{1}, two{1, 2};
  EXPECT_THROW(welch_t_test(one, two), Error);
}

}  // namespace
}  // namespace shc
