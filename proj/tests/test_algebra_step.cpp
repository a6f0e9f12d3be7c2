#include <cmath>

#include <gtest/gtest.h>

#include "orlicz/algebra.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/random.hpp"
#include "orlicz/spectral.hpp"
#include "orlicz/step_function.hpp"

using namespace orlicz;

TEST(Algebra, Construction) {
  const auto full = TracialAlgebra::full(4);
  EXPECT_EQ(full->dim(), 4);
  EXPECT_FALSE(full->commutative());
  EXPECT_NEAR(full->weights()[0], 0.25, 1e-15);
  const auto diag = TracialAlgebra::diagonal({0.5, 0.25, 0.25});
  EXPECT_TRUE(diag->commutative());
  const auto blocks = TracialAlgebra::block_diagonal({2, 1}, {0.5, 0.5});
  EXPECT_NEAR(blocks->weights()[2], 0.5, 1e-15);
  EXPECT_NEAR(blocks->weights()[0], 0.25, 1e-15);
  EXPECT_THROW(TracialAlgebra::diagonal({0.5, 0.4}), DomainError);
  EXPECT_THROW(TracialAlgebra::diagonal({1.5, -0.5}), DomainError);
  EXPECT_THROW(TracialAlgebra::full(0), DomainError);
}

TEST(Algebra, ElementValidation) {
  const auto full = TracialAlgebra::full(2);
  Eigen::MatrixXcd m(2, 2);
  m << 1, std::complex<double>(0, 1), std::complex<double>(0, 1), 1;
  EXPECT_THROW(Element(full, m), DomainError);
  const auto blocks = TracialAlgebra::block_diagonal({1, 1}, {0.5, 0.5});
  Eigen::MatrixXcd off(2, 2);
  off << 1, 1, 1, 1;
  EXPECT_THROW(Element(blocks, off), DomainError);
  EXPECT_THROW(Element(TracialAlgebra::diagonal(3), Eigen::VectorXd(Eigen::VectorXd::Ones(2))), DomainError);
  EXPECT_THROW(require_same_algebra(Element::zero(full), Element::zero(TracialAlgebra::diagonal(2))), DomainError);
}

TEST(Algebra, TraceIsNormalized) {
  EXPECT_NEAR(trace(Element::identity(TracialAlgebra::full(5))), 1.0, 1e-15);
  EXPECT_NEAR(trace(Element::identity(TracialAlgebra::diagonal({0.1, 0.9}))), 1.0, 1e-15);
}

TEST(StepFunction, RearrangementAndNorms) {
  const auto f = StepFunction::rearrangement({1.0, 3.0, 0.0, 3.0}, {0.25, 0.25, 0.25, 0.25});
  EXPECT_EQ(f.values().size(), 2u);  // equal values merged, zero dropped
  EXPECT_DOUBLE_EQ(f(0.1), 3.0);
  EXPECT_DOUBLE_EQ(f(0.6), 1.0);
  EXPECT_DOUBLE_EQ(f(0.9), 0.0);
  EXPECT_NEAR(f.integral(), 1.75, 1e-15);
  EXPECT_NEAR(f.partial_integral(0.25), 0.75, 1e-15);
  EXPECT_NEAR(f.lp_norm(2), std::sqrt(0.5 * 9 + 0.25), 1e-14);
  EXPECT_DOUBLE_EQ(f.sup(), 3.0);
}

TEST(StepFunction, Validation) {
  EXPECT_THROW(StepFunction({0.0, 0.5}, {1.0, 2.0}), DomainError);
  EXPECT_THROW(StepFunction({0.1, 0.5}, {1.0}), DomainError);
  EXPECT_THROW(StepFunction({0.0, 0.5, 0.4}, {2.0, 1.0}), DomainError);
  EXPECT_THROW(StepFunction({0.0, 0.5, 0.7}, {1.0, 2.0}), DomainError);
}

TEST(StepFunction, DilationKeepsTruncatedMass) {
  const auto f = StepFunction::indicator(0.5);
  const auto d = dilate(f, 4.0);
  EXPECT_DOUBLE_EQ(d(0.99), 1.0);
  EXPECT_NEAR(d.integral(), 1.0, 1e-15);
  EXPECT_NEAR(d.truncated_mass(), 1.0, 1e-15);
  const auto h = dilate(f, 0.5);
  EXPECT_NEAR(h.integral(), 0.25, 1e-15);
}

TEST(StepFunction, MajorizationExamples) {
  const auto a = StepFunction::indicator(0.5);
  const auto b = StepFunction({0.0, 0.25}, {2.0});
  EXPECT_TRUE(majorizes(a, b));
  EXPECT_FALSE(majorizes(b, a));
  EXPECT_TRUE(majorizes(a, a));
  EXPECT_TRUE(pointwise_leq(a.scaled(0.5), a));
  EXPECT_FALSE(pointwise_leq(a, b));
  const auto m = pointwise_max(a, b);
  EXPECT_DOUBLE_EQ(m(0.1), 2.0);
  EXPECT_DOUBLE_EQ(m(0.4), 1.0);
}

// majorization is a preorder; pointwise order implies majorization
TEST(StepFunctionProperty, Preorder) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_step_function(rng, 5), g = random_step_function(rng, 5), h = random_step_function(rng, 5);
    EXPECT_TRUE(majorizes(f, f));
    if (majorizes(f, g) && majorizes(g, h)) EXPECT_TRUE(majorizes(f, h));
    EXPECT_TRUE(majorizes(f, pointwise_max(f, g)));
    EXPECT_TRUE(majorizes(f, f + g));
    EXPECT_NEAR((f + g).integral(), f.integral() + g.integral(), 1e-12);
  }
}
