#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/series.hpp"

using namespace orlicz;

TEST(Numeric, Log2AddIdentities) {
  EXPECT_DOUBLE_EQ(log2_add(0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(log2_add(-kInf, 3.5), 3.5);
  EXPECT_EQ(log2_add(-kInf, -kInf), -kInf);
  EXPECT_NEAR(log2_add(1000.0, 1000.0), 1001.0, 1e-12);
  EXPECT_NEAR(log2_add(2.0, 0.0), std::log2(5.0), 1e-15);
}

TEST(Numeric, ConjugateExponent) {
  EXPECT_DOUBLE_EQ(conjugate_exponent(2.0), 2.0);
  EXPECT_NEAR(conjugate_exponent(1.01), 101.0, 1e-9);
  EXPECT_THROW(conjugate_exponent(1.0), DomainError);
}

TEST(Numeric, LeastSquaresRecoversLine) {
  std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto f = least_squares(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.rms_residual, 0.0, 1e-14);
}

TEST(Series, GeometricSumMatchesClosedForm) {
  // sum_{k>=0} 2^{-k} = 2
  const auto r = sum_outward([](std::int64_t k) { return -static_cast<double>(k); }, 0, +1, 0);
  EXPECT_NEAR(std::exp2(r.log2_sum), 2.0, 1e-13);
  EXPECT_LE(r.tail_bound, 1e-13);
}

TEST(Series, DownwardSumStopsAtVanishingTerm) {
  const auto r = sum_outward([](std::int64_t k) { return k < -3 ? -kInf : 0.0; }, 0, -1, 0);
  EXPECT_NEAR(std::exp2(r.log2_sum), 4.0, 1e-14);
  EXPECT_EQ(r.tail_bound, 0.0);
}

TEST(Series, DivergentSeriesThrows) {
  EXPECT_THROW(sum_outward([](std::int64_t) { return 0.0; }, 0, +1, 0), DivergenceError);
  EXPECT_THROW(sum_outward([](std::int64_t k) { return k > 5 ? kInf : 0.0; }, 0, +1, 0), DivergenceError);
}

// slowly converging: ratio 2^{-1/64}
TEST(Series, SlowGeometricTail) {
  const auto r = sum_outward([](std::int64_t k) { return -static_cast<double>(k) / 64.0; }, 0, +1, 0);
  const double exact = 1.0 / (1.0 - std::exp2(-1.0 / 64.0));
  EXPECT_NEAR(std::exp2(r.log2_sum) / exact, 1.0, 1e-11);
}
