#include <cmath>

#include <gtest/gtest.h>

#include "orlicz/errors.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/proposition.hpp"
#include "orlicz/spectral.hpp"

using namespace orlicz;

namespace {

const YoungFunction chi = YoungFunction::chi_infinity();
const YoungFunction llog2 = YoungFunction::llog(2);

void expect_chain_invariants(const ProjectionChain& c) {
  for (int k = c.k_min; k < c.k_max; ++k) {
    EXPECT_TRUE(psd_leq(c.e_tilde_at(k + 1), c.e_tilde_at(k))) << k;
    EXPECT_TRUE(is_projection(c.q_at(k))) << k;
  }
  // q_k pairwise disjoint and sum to 1 - e~_{k_max} - (1 - e~_{k_min})
  Element sum = Element::zero(c.e.front().algebra());
  for (int k = c.k_min; k < c.k_max; ++k) sum = sum + c.q_at(k);
  EXPECT_TRUE(is_projection(sum, 1e-9));
  EXPECT_NEAR(trace(sum), trace(c.e_tilde_at(c.k_min)) - c.residual, 1e-10);
}

}  // namespace

TEST(Proposition, WholeSpaceChain) {
  const auto f = Filtration::dyadic(3);
  const auto one = Element::identity(f.algebra());
  const auto c = weak_type_projection_chain(f, one, 1.0, 0, llog2, chi, -4, 4);
  for (int k = -4; k <= 0; ++k) EXPECT_NEAR(trace(c.e_tilde_at(k)), 1.0, 1e-15);
  EXPECT_NEAR(trace(c.q_at(0)), 1.0, 1e-15);
  for (int k = 1; k < 4; ++k) EXPECT_EQ(trace(c.q_at(k)), 0.0);
  expect_chain_invariants(c);
  // large eta: nothing exceeds any level
  const auto big = weak_type_projection_chain(f, one, 1e6, 0, llog2, chi, -4, 4);
  for (int k = -4; k < 4; ++k) EXPECT_EQ(trace(big.q_at(k)), 0.0);
}

TEST(Proposition, RunningMeetIsBitExactCommutative) {
  const auto d = Filtration::dyadic(5);
  const auto f = Filtration::tensor(d, d);
  const auto c = weak_type_projection_chain(f, rectangle(f, 2, 1), 1.0, 0, llog2, chi);
  for (int k = c.k_min; k <= c.k_max; ++k) {
    Eigen::VectorXd m = Eigen::VectorXd::Ones(f.algebra()->dim());
    for (int j = c.k_min; j <= k; ++j) m = m.cwiseMin(c.e_at(j).diagonal());
    EXPECT_EQ(m, c.e_tilde_at(k).diagonal()) << k;
  }
  expect_chain_invariants(c);
  EXPECT_TRUE(c.level_bound_ok);
  EXPECT_TRUE(c.mass_bound_ok);
}

TEST(Proposition, MajorizerCollapses) {
  const auto f = Filtration::dyadic(3);
  const auto one = Element::identity(f.algebra());
  const auto c = weak_type_projection_chain(f, one, 1.0, 0, llog2, chi, -4, 4);
  // single nonzero q_0: z = lambda_0 q_0 whatever the coefficient
  const auto z = majorizer_z(c, std::map<std::int64_t, double>{{0, 7.0}});
  EXPECT_NEAR((z.diagonal() - one.diagonal()).cwiseAbs().maxCoeff(), 0.0, 1e-15);
  EXPECT_THROW(majorizer_z(c, std::map<std::int64_t, double>{{1, 1.0}}), InfeasibleError);
  const auto none = weak_type_projection_chain(f, one, 1e6, 0, llog2, chi, -4, 4);
  EXPECT_EQ(trace(majorizer_z(none, std::map<std::int64_t, double>{{0, 1.0}})), 0.0);
}

TEST(Proposition, Preconditions) {
  const auto f = Filtration::dyadic(3);
  EXPECT_THROW(weak_type_projection_chain(f, dirac(f, 1.0), 1.0, 0, llog2, chi), PreconditionError);
  EXPECT_THROW(weak_type_projection_chain(f, rectangle(f, 1), 1.0, 1, llog2, chi), InfeasibleError);
  EXPECT_THROW(weak_type_projection_chain(f, rectangle(f, 1), -1.0, 0, llog2, chi), DomainError);
}

TEST(Proposition, TrivialFiltrationWholeSpace) {
  const auto f = Filtration::dyadic(1);
  const auto rep = verify_proposition(f, Element::identity(f.algebra()), 1.5, llog2, chi, 1.0);
  EXPECT_TRUE(rep.passed());
}

TEST(Proposition, DoobOneDimensional) {
  const auto f = Filtration::dyadic(10);
  const auto rep = verify_proposition(f, rectangle(f, 10), 1.5, llog2, chi, 1.0);
  EXPECT_TRUE(rep.level_ok);
  EXPECT_TRUE(rep.domination_ok);
  EXPECT_TRUE(rep.majorization_ok);
  EXPECT_TRUE(rep.norm_ok);
  EXPECT_EQ(rep.k0, 0);
  EXPECT_NEAR(rep.F, 1282.0692898641832, 1e-6);
}

TEST(Proposition, StrongMaximalRectangles) {
  const auto d = Filtration::dyadic(6);
  const auto f = Filtration::tensor(d, d);
  for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {6, 6}, {0, 4}}) {
    const auto rep = verify_proposition(f, rectangle(f, a, b), 1.5, llog2, chi, 1.0);
    EXPECT_TRUE(rep.passed()) << a << "," << b;
    EXPECT_LE(rep.mass_factor, 2.0);
    EXPECT_GE(rep.min_eigenvalue, -1e-8 * rep.linf_z);
    EXPECT_LE(rep.norm_ratio, 4.0 * rep.F);
  }
}

TEST(Proposition, MatrixFiltrationWithCuculescu) {
  const auto f = Filtration::matrix(3);
  const auto rep = verify_proposition(f, rectangle(f, 2), 1.5, llog2, chi, 1.0);
  EXPECT_TRUE(rep.domination_ok);
  EXPECT_TRUE(rep.norm_ok);
}

// item (ii) across eta and p
TEST(PropositionProperty, DominationAcrossParameters) {
  const auto d = Filtration::dyadic(4);
  const auto f = Filtration::tensor(d, d);
  for (double eta : {0.5, 1.0, 3.0}) {
    for (double p : {1.2, 1.5, 2.5}) {
      const auto rep = verify_proposition(f, rectangle(f, 1, 2), p, llog2, chi, eta);
      EXPECT_TRUE(rep.domination_ok) << eta << " " << p;
      EXPECT_TRUE(rep.level_ok) << eta << " " << p;
    }
  }
}
