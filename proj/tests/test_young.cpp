#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "orlicz/errors.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

TEST(Young, PowerAndLlogValues) {
  const auto p2 = YoungFunction::power(2);
  EXPECT_DOUBLE_EQ(p2(3.0), 9.0);
  const auto l1 = YoungFunction::llog(1);
  EXPECT_DOUBLE_EQ(l1(0.5), 0.5);
  EXPECT_DOUBLE_EQ(l1(4.0), 12.0);  // 4 (1 + log2 4)
  EXPECT_DOUBLE_EQ(YoungFunction::llog(0)(7.0), 7.0);
}

TEST(Young, ChiInfinity) {
  const auto chi = YoungFunction::chi_infinity();
  EXPECT_EQ(chi(1.0), 0.0);
  EXPECT_EQ(chi(1.0 + 1e-9), std::numeric_limits<double>::infinity());
  EXPECT_EQ(chi.log2_at(0.0), -std::numeric_limits<double>::infinity());
  EXPECT_FALSE(chi.finite_everywhere());
}

TEST(Young, CustomTableInterpolatesInLogLog) {
  const auto c = YoungFunction::custom({-1, 0, 1, 2}, {-1, 0, 1.5, 3.5});
  EXPECT_NEAR(c(2.0), std::exp2(1.5), 1e-13);
  EXPECT_NEAR(c(3.0), 6.3639610306789267, 1e-12);  // slope 2 on [1, 2]
  EXPECT_NEAR(c(0.25), 0.25, 1e-15);               // end slope 1 extended
  EXPECT_EQ(c.label(), "custom:4");
}

TEST(Young, CustomTableValidation) {
  EXPECT_THROW(YoungFunction::custom({0}, {0}), DomainError);
  EXPECT_THROW(YoungFunction::custom({0, 1}, {1, 0}), DomainError);
  EXPECT_THROW(YoungFunction::custom({0, 1}, {0, 0.5}), DomainError);            // slope < 1
  EXPECT_THROW(YoungFunction::custom({0, 1, 2}, {0, 3, 4}), DomainError);        // concave kink
  EXPECT_THROW(YoungFunction::custom({0, 0}, {0, 1}), DomainError);
}

TEST(Young, ParseDescriptors) {
  EXPECT_EQ(parse_young("power:2").label(), "power:2");
  EXPECT_EQ(parse_young("llog:1.5").kind(), YoungKind::llog);
  EXPECT_EQ(parse_young("chi").kind(), YoungKind::chi_infinity);
  EXPECT_EQ(parse_young("chi_infinity").kind(), YoungKind::chi_infinity);
  EXPECT_THROW(parse_young("power"), DomainError);
  EXPECT_THROW(parse_young("power:x"), DomainError);
  EXPECT_THROW(parse_young("exp:1"), DomainError);
  EXPECT_THROW(parse_young("power:0.5"), DomainError);
}

TEST(Young, DilationFunctionClosedForms) {
  EXPECT_NEAR(eval_M(YoungFunction::power(3), 2.0), 8.0, 1e-12);
  EXPECT_DOUBLE_EQ(eval_M(YoungFunction::llog(1), 8.0), 32.0);
  EXPECT_DOUBLE_EQ(eval_M(YoungFunction::llog(2), 0.25), 0.25);
  EXPECT_NEAR(eval_M(YoungFunction::custom({-1, 0, 1, 2}, {-1, 0, 1.5, 3.5}), 2.0), 4.0, 1e-12);
  EXPECT_THROW(eval_M(YoungFunction::chi_infinity(), 2.0), UnsupportedError);
}

TEST(Young, MatuszewskaIndices) {
  const auto p = matuszewska_indices(YoungFunction::power(2.5));
  EXPECT_DOUBLE_EQ(p.lower, 2.5);
  EXPECT_DOUBLE_EQ(p.upper, 2.5);
  const auto l2 = matuszewska_indices(YoungFunction::llog(2));
  EXPECT_NEAR(l2.lower, 1.0, 1e-12);
  EXPECT_NEAR(l2.upper, 1.0077001299437083, 1e-10);
  EXPECT_NEAR(l2.error_estimate, 0.0086975096332135848, 1e-10);
  // true indices are (1, 1); the error estimate covers the gap
  EXPECT_LE(l2.upper - 1.0, l2.error_estimate);
  EXPECT_THROW(matuszewska_indices(YoungFunction::chi_infinity()), UnsupportedError);
}

TEST(Young, DoublingAndEnvelope) {
  EXPECT_TRUE(check_doubling(YoungFunction::llog(1), 200));
  EXPECT_TRUE(check_doubling(YoungFunction::power(3), 200));
  EXPECT_TRUE(growth_envelope_check(YoungFunction::llog(2), 0.1));
  EXPECT_TRUE(growth_envelope_check(YoungFunction::power(2), 0.05));
  EXPECT_THROW(growth_envelope_check(YoungFunction::llog(2), 0.0), DomainError);
}

TEST(Young, LittleO) {
  std::vector<double> grid;
  for (int j = 1; j <= 40; ++j) grid.push_back(std::exp2(j));
  EXPECT_TRUE(little_o_check(YoungFunction::llog(1), YoungFunction::llog(2), grid).verdict);
  EXPECT_FALSE(little_o_check(YoungFunction::llog(2), YoungFunction::llog(1), grid).verdict);
  EXPECT_FALSE(little_o_check(YoungFunction::power(2), YoungFunction::power(2), grid).verdict);
}

// invariants: Phi(0) = 0, monotone, convex along random chords
TEST(YoungProperty, ConvexMonotoneOnRandomChords) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-20.0, 20.0), w(0.0, 1.0);
  const YoungFunction fs[] = {YoungFunction::power(1), YoungFunction::power(3.5), YoungFunction::llog(0.5),
                              YoungFunction::llog(3), YoungFunction::custom({-1, 0, 1, 2}, {-1, 0, 1.5, 3.5})};
  for (const auto& f : fs) {
    EXPECT_EQ(f(0.0), 0.0);
    EXPECT_TRUE(satisfies_young_invariants(f));
    for (int i = 0; i < 500; ++i) {
      const double a = std::exp2(u(rng)), b = std::exp2(u(rng)), t = w(rng);
      const double lo = std::min(a, b), hi = std::max(a, b);
      EXPECT_LE(f(lo), f(hi) * (1 + 1e-12));
      const double mid = f(t * a + (1 - t) * b);
      EXPECT_LE(mid, (t * f(a) + (1 - t) * f(b)) * (1 + 1e-10) + 1e-300) << f.label();
    }
  }
}

// M_Phi is submultiplicative: M(st) <= M(s) M(t)
TEST(YoungProperty, DilationSubmultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (const auto& f : {YoungFunction::llog(1), YoungFunction::llog(2),
                        YoungFunction::custom({-1, 0, 1, 2}, {-1, 0, 1.5, 3.5})}) {
    for (int i = 0; i < 60; ++i) {
      const double s = std::exp2(std::round(u(rng))), t = std::exp2(std::round(u(rng)));
      EXPECT_LE(eval_M(f, s * t), eval_M(f, s) * eval_M(f, t) * (1 + 1e-10)) << f.label();
    }
  }
}
