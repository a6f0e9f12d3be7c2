#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "orlicz/algebra.hpp"
#include "orlicz/step_function.hpp"

namespace orlicz {

// Eigenvalues paired with their trace weights (the spectral measure of x under tau).
struct Spectrum {
  std::vector<double> values;
  std::vector<double> weights;
};

Spectrum spectrum(const Element& x);
double min_eigenvalue(const Element& x);
double operator_norm(const Element& x);  // spectral radius of |x|

double trace(const Element& x);
double lp_norm(const Element& x, double p);

// f(x) via functional calculus
Element apply(const Element& x, const std::function<double(double)>& f);

struct Interval {
  double lo;
  double hi;
  bool lo_open = true;
  bool hi_open = false;

  static Interval open_closed(double a, double b) { return {a, b, true, false}; }
  static Interval closed(double a, double b) { return {a, b, false, false}; }
  static Interval above(double a) { return {a, std::numeric_limits<double>::infinity(), true, true}; }
};

inline constexpr double kBoundarySnap = 1e-12;

// Eigenvalues within kBoundarySnap (relative to max(1,|endpoint|)) of an open endpoint are
// excluded and of a closed endpoint included; `degenerate` reports whether any snapping occurred.
Element spectral_projection(const Element& x, const Interval& interval, bool* degenerate = nullptr);

bool is_projection(const Element& e, double tol = 1e-10);

StepFunction singular_numbers(const Element& x);
// lambda_s(x) = tau(1_{(s, inf)}(|x|))
double distribution(const Element& x, double s);

// min eigenvalue of b - a >= -1e-9 max(1, ||b||)
bool psd_leq(const Element& a, const Element& b);

// projection onto ran(e) and ran(f); ranks decided at 1e-10
Element meet(const Element& e, const Element& f);

struct BinaryDecomposition {
  int n_min = 0;
  int n_max = 0;
  std::vector<std::pair<int, Element>> projections;  // (n, r_n) with r_n != 0
  double residual = 0.0;         // max over eigenvalues of the dropped digits
  double matrix_residual = 0.0;  // ||x - sum 2^{-n} r_n||_inf as assembled in floating point
};

// x = sum_n 2^{-n} r_n with r_n the spectral projection on eigenvalues whose binary digit n is 1
BinaryDecomposition binary_decomposition(const Element& x, int n_min, int n_max);

struct SandwichReport {
  double alpha = 1.0;
  bool lower_majorization = false;  // mu(x^alpha) majorized by sum 2^{-n alpha} mu(r_n)
  bool upper_pointwise = false;     // sum 2^{-n alpha} mu(r_n) <= (1 - 2^{-alpha})^{-1} mu(x^alpha)
};

SandwichReport binary_sandwich(const Element& x, const BinaryDecomposition& dec, double alpha, double tol = 1e-9);

struct DominationReport {
  double min_eigenvalue = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

// (sum q) x (sum q) <= (sum 1/d_k) sum d_k q_k x q_k
DominationReport diagonal_domination_check(const std::vector<Element>& q, const std::vector<double>& d,
                                           const Element& x);

// Under e' S e' = 0 (e' = 1 - e), S = e S e.
bool corner_identity_check(const Element& s, const Element& e);

}  // namespace orlicz
