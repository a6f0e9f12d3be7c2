#include "orlicz/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/spectral.hpp"

namespace orlicz {

std::vector<Element> maximal_family(const Filtration& f, const Element& x) {
  std::vector<Element> out;
  out.reserve(f.levels().size());
  for (const auto& lv : f.levels()) out.push_back(f.expect(x, lv));
  return out;
}

Element maximal_function(const Filtration& f, const Element& x) {
  if (!f.algebra()->commutative()) throw PreconditionError("pointwise sup needs a commutative algebra");
  Eigen::VectorXd sup = Eigen::VectorXd::Constant(x.dim(), -kInf);
  for (const auto& lv : f.levels()) sup = sup.cwiseMax(f.expect(x, lv).diagonal());
  return Element(f.algebra(), sup);
}

namespace {

void require_psd(const Element& x) {
  if (min_eigenvalue(x) < -1e-10 * std::max(1.0, operator_norm(x))) {
    throw DomainError("sequence element is not positive semidefinite");
  }
}

}  // namespace

LpLinfResult lp_linf_norm_positive(const std::vector<Element>& seq, double p) {
  if (seq.empty()) throw DomainError("empty sequence");
  for (const auto& x : seq) {
    require_same_algebra(seq.front(), x);
    require_psd(x);
  }
  LpLinfResult r;
  if (seq.front().is_diagonal()) {
    Eigen::VectorXd a = seq.front().diagonal();
    for (const auto& x : seq) a = a.cwiseMax(x.diagonal());
    r.certificate = Element(seq.front().algebra(), a);
    r.value = r.lower = lp_norm(r.certificate, p);
    r.exact = true;
    return r;
  }
  // a <- a + (x_n - a)_+ cycled until no sequence element sticks out
  Element a = seq.front();
  double scale = 0.0;
  for (const auto& x : seq) scale = std::max(scale, operator_norm(x));
  const double tol = 1e-13 * std::max(1.0, scale);
  for (r.sweeps = 1; r.sweeps <= 1000; ++r.sweeps) {
    bool changed = false;
    for (const auto& x : seq) {
      const Element excess = apply(x - a, [&](double v) { return v > tol ? v : 0.0; });
      if (excess.max_abs_entry() > tol) {
        a = a + excess;
        changed = true;
      }
    }
    if (!changed) break;
  }
  r.certificate = a;
  r.value = lp_norm(a, p);
  StepFunction env;
  double best_single = 0.0;
  for (const auto& x : seq) {
    env = pointwise_max(env, singular_numbers(x));
    best_single = std::max(best_single, lp_norm(x, p));
  }
  r.lower = std::max(best_single, env.lp_norm(p));
  r.exact = r.value - r.lower <= 1e-6 * std::max(1e-300, r.value);
  return r;
}

Element cuculescu_projection(const Filtration& f, const Element& x, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  if (f.doubly_indexed()) throw UnsupportedError("Cuculescu projections need a singly indexed filtration");
  Element q = Element::identity(f.algebra());
  const Interval below{-kInf, lambda, true, false};
  for (const auto& lv : f.levels()) {
    const Element a = sandwich(q, f.expect(x, lv));
    const Element p = spectral_projection(a, below);
    q = commuting_product(q, p);
    // clean rounding so q stays an exact projection
    q = apply(q, [](double v) { return v > 0.5 ? 1.0 : 0.0; });
  }
  return q;
}

bool witness_is_exact(const Filtration& f) { return f.algebra()->commutative(); }

Element weak_type_witness(const Filtration& f, const Element& x, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  if (f.algebra()->commutative()) {
    return spectral_projection(maximal_function(f, x), Interval{-kInf, lambda, true, false});
  }
  return cuculescu_projection(f, x, lambda);
}

Element dirac(const Filtration& f, double mass) {
  const AlgebraPtr& alg = f.algebra();
  const double v = mass / alg->weights()[0];
  if (alg->commutative()) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(alg->dim());
    d[0] = v;
    return Element(alg, d);
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(alg->dim(), alg->dim());
  m(0, 0) = v;
  return Element(alg, m);
}

Element rectangle(const Filtration& f, int a, int b) {
  if (a < 0 || a > f.depth_first()) throw DomainError("rectangle side out of range");
  const int bmax = f.doubly_indexed() ? f.depth_second() : 0;
  if (b < 0 || b > bmax) throw DomainError("rectangle side out of range");
  const AlgebraPtr& alg = f.algebra();
  const int Q = f.classical_registers() + f.quantum_registers();
  std::int64_t mask = 0;
  for (int j = 0; j < a; ++j) mask |= std::int64_t{1} << (Q - 1 - (f.factor_offset(0) + j));
  for (int j = 0; j < b; ++j) mask |= std::int64_t{1} << (Q - 1 - (f.factor_offset(1) + j));
  Eigen::VectorXd ind(alg->dim());
  for (std::int64_t i = 0; i < alg->dim(); ++i) ind[i] = (i & mask) == 0 ? 1.0 : 0.0;
  if (alg->commutative()) return Element(alg, ind);
  return Element(alg, Eigen::MatrixXcd(ind.cast<std::complex<double>>().asDiagonal()));
}

Element power_profile(const Filtration& f, double exponent) {
  if (!f.algebra()->commutative() || f.doubly_indexed()) {
    throw UnsupportedError("power profiles need a singly indexed commutative filtration");
  }
  if (!(exponent >= 0.0 && exponent < 1.0)) throw DomainError("profile exponent must lie in [0, 1)");
  const int d = f.algebra()->dim();
  const double c = std::pow(static_cast<double>(d), exponent) / (1.0 - exponent);
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) v[i] = c * (std::pow(i + 1.0, 1.0 - exponent) - std::pow(static_cast<double>(i), 1.0 - exponent));
  return Element(f.algebra(), v);
}

namespace {

// distinct eigenvalues of a PSD element with their total trace weight
std::vector<std::pair<double, double>> compressed_spectrum(const Element& x) {
  const Spectrum s = spectrum(x);
  std::map<double, double> acc;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (s.values[i] > 0.0) acc[s.values[i]] += s.weights[i];
  }
  return {acc.begin(), acc.end()};
}

double orlicz_mass(const YoungFunction& phi, const std::vector<std::pair<double, double>>& spec, double scale) {
  double t = 0.0;
  for (const auto& [v, w] : spec) t += w * phi(scale * v);
  return t;
}

// minimal C, up to kWeakTypeRelTol, with tau Phi(C x / lambda) >= deficit
double minimal_constant(const YoungFunction& phi, const std::vector<std::pair<double, double>>& spec, double lambda,
                        double deficit) {
  if (deficit <= 0.0) return 0.0;
  if (spec.empty()) return kInf;
  auto ok = [&](double c) { return orlicz_mass(phi, spec, c / lambda) >= deficit; };
  double lo = 1.0, hi = 1.0;
  if (ok(1.0)) {
    while (ok(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) return 0.0;
    }
  } else {
    while (!ok(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) return kInf;
    }
  }
  while (hi / lo - 1.0 > kWeakTypeRelTol) {
    const double mid = std::sqrt(lo * hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

WeakTypeEstimate estimate_weak_orlicz_constant(const Filtration& f, const YoungFunction& phi,
                                               const std::vector<Element>& tests,
                                               const std::vector<double>& lambda_grid) {
  if (tests.empty()) throw DomainError("empty test set");
  if (lambda_grid.empty()) throw DomainError("empty lambda grid");
  WeakTypeEstimate est;
  est.worst_lambda = lambda_grid.front();
  est.upper_bound_only = !witness_is_exact(f);
  const bool commutative = f.algebra()->commutative();
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const Element& x = tests[i];
    require_psd(x);
    const auto spec = compressed_spectrum(x);
    Element sup;
    if (commutative) sup = maximal_function(f, x);
    double worst = 0.0;
    for (double lambda : lambda_grid) {
      if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
      const Element e = commutative ? spectral_projection(sup, Interval{-kInf, lambda, true, false})
                                    : cuculescu_projection(f, x, lambda);
      const double deficit = 1.0 - trace(e);
      const double c = minimal_constant(phi, spec, lambda, deficit > 1e-14 ? deficit : 0.0);
      worst = std::max(worst, c);
      if (c > est.constant) {
        est.constant = c;
        est.worst_test = i;
        est.worst_lambda = lambda;
      }
    }
    est.per_test.push_back(worst);
  }
  return est;
}

LpRatio strong_maximal_lp_lower(const Filtration& f, double p, const std::vector<Element>& tests) {
  if (!f.algebra()->commutative()) throw PreconditionError("L_p lower bounds need a commutative filtration");
  if (tests.empty()) throw DomainError("empty test set");
  LpRatio r;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    require_psd(tests[i]);
    // the lattice sup is the exact positive L_p(l_inf) norm; computed level by level to bound memory
    const double v = lp_norm(maximal_function(f, tests[i]), p) / lp_norm(tests[i], p);
    if (v > r.ratio) {
      r.ratio = v;
      r.worst_test = i;
    }
  }
  return r;
}

LpRatio strong_maximal_lp_lower_separable(const Filtration& first, const Filtration& second, double p,
                                          const std::vector<std::pair<Element, Element>>& tests) {
  if (first.doubly_indexed() || second.doubly_indexed() || !first.algebra()->commutative() ||
      !second.algebra()->commutative()) {
    throw PreconditionError("separable bounds need two singly indexed commutative filtrations");
  }
  if (tests.empty()) throw DomainError("empty test set");
  LpRatio r;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto& [g, h] = tests[i];
    const double a = lp_norm(maximal_function(first, g), p) / lp_norm(g, p);
    const double b = lp_norm(maximal_function(second, h), p) / lp_norm(h, p);
    if (a * b > r.ratio) {
      r.ratio = a * b;
      r.worst_test = i;
    }
  }
  return r;
}

std::vector<Element> doob_test_family(const Filtration& f, double p) {
  std::vector<Element> tests{dirac(f, 1.0)};
  for (int i = 1; i <= 6; ++i) tests.push_back(power_profile(f, (1.0 - std::exp2(-i)) / p));
  return tests;
}

std::vector<double> dyadic_lambda_grid(int j_lo, int j_hi, double scale) {
  if (j_hi < j_lo || !(scale > 0.0)) throw DomainError("empty lambda grid");
  std::vector<double> out;
  for (int j = j_lo; j <= j_hi; ++j) out.push_back(scale * std::exp2(j));
  return out;
}

namespace {

LpSlope fit_slope(LpSlope s) {
  if (s.p.size() < 2) throw PreconditionError("slope fit needs at least two p values");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < s.p.size(); ++i) {
    x.push_back(std::log(s.p_prime[i]));
    y.push_back(std::log(s.ratio[i]));
  }
  const LinearFit fit = least_squares(x, y);
  s.slope = fit.slope;
  s.intercept = fit.intercept;
  return s;
}

}  // namespace

LpSlope strong_maximal_slope(const Filtration& f, const std::vector<double>& p_grid) {
  LpSlope s;
  for (double p : p_grid) {
    s.p.push_back(p);
    s.p_prime.push_back(conjugate_exponent(p));
    s.ratio.push_back(strong_maximal_lp_lower(f, p, doob_test_family(f, p)).ratio);
  }
  return fit_slope(std::move(s));
}

LpSlope strong_maximal_slope_separable(const Filtration& first, const Filtration& second,
                                       const std::vector<double>& p_grid) {
  LpSlope s;
  for (double p : p_grid) {
    const auto g = doob_test_family(first, p);
    const auto h = doob_test_family(second, p);
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& a : g)
      for (const auto& b : h) pairs.emplace_back(a, b);
    s.p.push_back(p);
    s.p_prime.push_back(conjugate_exponent(p));
    s.ratio.push_back(strong_maximal_lp_lower_separable(first, second, p, pairs).ratio);
  }
  return fit_slope(std::move(s));
}

}  // namespace orlicz
