#pragma once

#include <cstdint>
#include <vector>

#include "orlicz/filtration.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// [E x] over every level of the filtration, in level order.
std::vector<Element> maximal_family(const Filtration& f, const Element& x);

// Pointwise sup over the family; commutative algebras only.
Element maximal_function(const Filtration& f, const Element& x);

struct LpLinfResult {
  double value = 0.0;  // upper bound (exact for commutative families)
  double lower = 0.0;
  Element certificate;  // a with x_n <= a for every n
  bool exact = false;   // bounds meet within 1e-6
  int sweeps = 0;
};

// inf{ ||a||_p : 0 <= x_n <= a } for a positive sequence
LpLinfResult lp_linf_norm_positive(const std::vector<Element>& seq, double p);

// Cuculescu projection for a singly indexed filtration.
Element cuculescu_projection(const Filtration& f, const Element& x, double lambda);

// e_lambda witnessing the weak-type inequality: the level set {sup_n E_n x <= lambda} in
// commutative algebras, the Cuculescu projection for matrix filtrations.
Element weak_type_witness(const Filtration& f, const Element& x, double lambda);
bool witness_is_exact(const Filtration& f);

// test elements
Element dirac(const Filtration& f, double mass);
// indicator (projection) of the first dyadic rectangle of side 2^{-a} x 2^{-b}
Element rectangle(const Filtration& f, int a, int b = 0);
// commutative singly indexed: cell averages of s^{-exponent}, exponent < 1
Element power_profile(const Filtration& f, double exponent);

struct WeakTypeEstimate {
  double constant = 0.0;
  std::size_t worst_test = 0;
  double worst_lambda = 0.0;
  bool upper_bound_only = false;  // Cuculescu witness: not the optimal projection
  std::vector<double> per_test;   // max over lambda for each test element
};

inline constexpr double kWeakTypeRelTol = 1e-3;

// smallest C with tau(1 - e_lambda) <= tau Phi(C x / lambda) on every (x, lambda)
WeakTypeEstimate estimate_weak_orlicz_constant(const Filtration& f, const YoungFunction& phi,
                                               const std::vector<Element>& tests,
                                               const std::vector<double>& lambda_grid);

struct LpRatio {
  double ratio = 0.0;
  std::size_t worst_test = 0;
};

// max over tests of ||sup_family x||_p / ||x||_p; commutative filtrations only
LpRatio strong_maximal_lp_lower(const Filtration& f, double p, const std::vector<Element>& tests);

// separable tests x = g (x) h on a product of two singly indexed commutative filtrations:
// the sup factorizes, so the ratio is the product of the one-dimensional ratios
LpRatio strong_maximal_lp_lower_separable(const Filtration& first, const Filtration& second, double p,
                                          const std::vector<std::pair<Element, Element>>& tests);

// Dirac element plus power profiles with exponents (1 - 2^{-i}) / p, i = 1..6
std::vector<Element> doob_test_family(const Filtration& f, double p);

// scale * 2^j for j in [j_lo, j_hi]
std::vector<double> dyadic_lambda_grid(int j_lo, int j_hi, double scale = 0.99);

struct LpSlope {
  std::vector<double> p;
  std::vector<double> p_prime;
  std::vector<double> ratio;
  double slope = 0.0;  // least squares of log ratio against log p'
  double intercept = 0.0;
};

// doob_test_family on a singly indexed commutative filtration
LpSlope strong_maximal_slope(const Filtration& f, const std::vector<double>& p_grid);
// products of the one-dimensional families
LpSlope strong_maximal_slope_separable(const Filtration& first, const Filtration& second,
                                       const std::vector<double>& p_grid);

}  // namespace orlicz
