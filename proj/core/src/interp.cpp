#include "orlicz/interp.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/series.hpp"

namespace orlicz {

ZSequence concatenate(ZSequence a, ZSequence b, std::int64_t k0) {
  return [a = std::move(a), b = std::move(b), k0](std::int64_t k) {
    return k <= k0 ? a(k) : a(k0) + b(k);
  };
}

void check_index_gate(double p, const YoungFunction& phi1, const YoungFunction& phi2) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("exponent p must be > 1");
  if (!phi1.finite_everywhere()) throw DivergenceError("Phi1 must be finite (q_{Phi1} < infinity)");
  const IndexPair i1 = matuszewska_indices(phi1);
  if (!(p > i1.upper - i1.error_estimate)) throw DivergenceError("p <= q_{Phi1}: series diverges");
  if (phi2.finite_everywhere()) {
    const IndexPair i2 = matuszewska_indices(phi2);
    if (!(p < i2.lower + i2.error_estimate)) throw DivergenceError("p >= p_{Phi2}: series diverges");
  }
}

namespace {

struct SplitSum {
  double log2_sum = -kInf;
  double rel_tail = 0.0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
};

// sum_k (2^{-k} (Phi2 #_{k0} Phi1)(2^k)^{1/p})^q
SplitSum concatenated_sum(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0, double q,
                          const WindowOptions& opt) {
  if (!(opt.eta > 0.0)) throw DomainError("eta must be positive");
  const double le = std::log2(opt.eta);
  const double c = phi2.log2_at(k0 - le);
  if (c == kInf) throw InfeasibleError("Phi2(1/lambda_k0) is infinite");

  SeriesOptions lo_opt;
  lo_opt.min_terms = std::max<std::int64_t>(1, k0 + opt.half_window + 1);
  auto lower = [&](std::int64_t k) {
    const double x = static_cast<double>(k) - le;
    const double v = phi2.log2_at(x);
    return v == -kInf ? -kInf : q * (-x + v / p);
  };
  const auto reg_lo = static_cast<std::int64_t>(std::floor(phi2.regular_below() + le));
  const SeriesResult L = sum_outward(lower, k0, -1, std::min<std::int64_t>(reg_lo, k0), lo_opt);

  SeriesOptions hi_opt;
  hi_opt.min_terms = std::max<std::int64_t>(1, opt.half_window - k0);
  auto upper = [&](std::int64_t k) {
    const double x = static_cast<double>(k) - le;
    return q * (-x + log2_add(c, phi1.log2_at(x)) / p);
  };
  // beyond this point the additive constant is invisible in double precision
  std::int64_t reg_hi =
      std::max<std::int64_t>(k0 + 1, static_cast<std::int64_t>(std::ceil(phi1.regular_above() + le)));
  if (c != -kInf) {
    while (phi1.log2_at(static_cast<double>(reg_hi) - le) < c + 64.0) ++reg_hi;
  }
  const SeriesResult R = sum_outward(upper, k0 + 1, 1, reg_hi, hi_opt);

  SplitSum s;
  s.log2_sum = log2_add(L.log2_sum, R.log2_sum);
  s.k_min = L.last_index;
  s.k_max = R.last_index;
  if (s.log2_sum != -kInf) {
    const double wl = L.log2_sum == -kInf ? 0.0 : std::exp2(L.log2_sum - s.log2_sum);
    const double wr = R.log2_sum == -kInf ? 0.0 : std::exp2(R.log2_sum - s.log2_sum);
    s.rel_tail = L.tail_bound * wl + R.tail_bound * wr;
  }
  return s;
}

ConstantResult finish(const SplitSum& s, double q, int k0) {
  ConstantResult r;
  r.argmin_k0 = k0;
  r.k_min = s.k_min;
  r.k_max = s.k_max;
  r.value = s.log2_sum == -kInf ? 0.0 : std::exp2(s.log2_sum / q);
  r.tail_estimate = r.value * (std::pow(1.0 + s.rel_tail, 1.0 / q) - 1.0);
  return r;
}

ConstantResult constant_at(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0, double q,
                           const WindowOptions& opt) {
  check_index_gate(p, phi1, phi2);
  return finish(concatenated_sum(p, phi1, phi2, k0, q, opt), q, k0);
}

ConstantResult constant_inf(double p, const YoungFunction& phi1, const YoungFunction& phi2, double q,
                            const WindowOptions& opt) {
  check_index_gate(p, phi1, phi2);
  ConstantResult best;
  best.value = kInf;
  best.argmin_k0 = opt.k0_min;
  double best_log = kInf;
  for (int k0 = opt.k0_min; k0 <= opt.k0_max; ++k0) {
    if (phi2.log2_at(k0 - std::log2(opt.eta)) == kInf) continue;
    const SplitSum s = concatenated_sum(p, phi1, phi2, k0, q, opt);
    if (s.log2_sum < best_log) {
      best_log = s.log2_sum;
      best = finish(s, q, k0);
    }
  }
  return best;
}

}  // namespace

ConstantResult constant_F(double p, const YoungFunction& phi1, const YoungFunction& phi2, const WindowOptions& opt) {
  return constant_inf(p, phi1, phi2, 0.5, opt);
}

ConstantResult constant_F_at(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                             const WindowOptions& opt) {
  return constant_at(p, phi1, phi2, k0, 0.5, opt);
}

ConstantResult constant_G(double p, const YoungFunction& phi1, const YoungFunction& phi2, const WindowOptions& opt) {
  return constant_inf(p, phi1, phi2, p / (p + 1.0), opt);
}

ConstantResult constant_G_at(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                             const WindowOptions& opt) {
  return constant_at(p, phi1, phi2, k0, p / (p + 1.0), opt);
}

ConstantResult constant_F_strong_infty(double p, const YoungFunction& phi, const WindowOptions& opt) {
  check_index_gate(p, phi, YoungFunction::chi_infinity());
  SeriesOptions so;
  so.min_terms = opt.half_window + 1;
  auto term = [&](std::int64_t k) {
    return -0.5 * static_cast<double>(k) + phi.log2_at(static_cast<double>(k)) / (2.0 * p);
  };
  const auto reg = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(phi.regular_above())));
  const SeriesResult s = sum_outward(term, 0, 1, reg, so);
  SplitSum ss;
  ss.log2_sum = s.log2_sum;
  ss.rel_tail = s.tail_bound;
  ss.k_min = 0;
  ss.k_max = s.last_index;
  return finish(ss, 0.5, 0);
}

double concatenated_quasi_norm(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                               std::int64_t k_lo, std::int64_t k_hi, double q) {
  const ZSequence a = [&](std::int64_t k) { return phi2(std::exp2(static_cast<double>(k))); };
  const ZSequence b = [&](std::int64_t k) { return phi1(std::exp2(static_cast<double>(k))); };
  const ZSequence cat = concatenate(a, b, k0);
  double s = 0.0;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const double v = cat(k);
    if (v == 0.0) continue;
    s += std::pow(std::exp2(-static_cast<double>(k)) * std::pow(v, 1.0 / p), q);
  }
  return std::pow(s, 1.0 / q);
}

CoefficientSequence optimal_dk(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                               CoefficientVariant variant, std::int64_t k_min, std::int64_t k_max, double eta) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  if (!(p >= 1.0)) throw DomainError("p must be >= 1");
  const double le = std::log2(eta);
  const double c = phi2.log2_at(k0 - le);
  if (c == kInf) throw InfeasibleError("Phi2(1/lambda_k0) is infinite");
  double a_lambda = 0.5, a_phi = 1.0 / (2.0 * p);
  if (variant == CoefficientVariant::p_over_p_plus_one) {
    a_lambda = p / (p + 1.0);
    a_phi = 1.0 / (p + 1.0);
  }
  CoefficientSequence d;
  d.variant = variant;
  d.k0 = k0;
  d.eta = eta;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const double inv_lambda = static_cast<double>(k) - le;  // log2(1/lambda_k)
    double phi_part;
    if (k <= k0) {
      phi_part = phi2.log2_at(inv_lambda);
    } else {
      const double v = phi1.log2_at(inv_lambda);
      if (v == kInf) throw InfeasibleError("Phi1 is infinite inside the window");
      phi_part = log2_add(c, v);
    }
    if (phi_part == -kInf) continue;  // zero term, d_k never materialized
    d.values[k] = std::exp2(a_lambda * inv_lambda - a_phi * phi_part);
  }
  return d;
}

namespace {

// golden-section minimum of a unimodal f on [a, b]
double golden_min(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && (b - a) > rel_tol * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

GeometricMean geometric_mean_factor(double p, const YoungFunction& phi1, const YoungFunction& phi2, double c1,
                                    double c2) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw DomainError("C1 and C2 must be positive");
  if (!(p >= 1.0)) throw DomainError("p must be >= 1");
  if (!phi1.finite_everywhere()) throw UnsupportedError("Phi1 must be finite");
  const bool chi = !phi2.finite_everywhere();
  // objective as a function of u = log2 eta
  auto objective = [&](double u) {
    double v = std::exp2(u + log2_M(phi1, std::log2(c1) - u) / p);
    if (!chi) v += std::exp2(u + log2_M(phi2, std::log2(c2) - u) / p);
    return v;
  };
  double lo = chi ? std::log2(c2) : std::min(std::log2(c1), std::log2(c2)) - 60.0;
  double hi = std::max(std::log2(c1), std::log2(c2)) + 60.0;
  // coarse scan, then refine around the best cell
  const int n = 480;
  int best = 0;
  double fbest = kInf;
  for (int i = 0; i <= n; ++i) {
    const double u = lo + (hi - lo) * i / n;
    const double f = objective(u);
    if (f < fbest) {
      fbest = f;
      best = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(0, best - 1) / n;
  const double b = lo + (hi - lo) * std::min(n, best + 1) / n;
  const double u = golden_min(objective, a, b, 1e-8);
  GeometricMean out;
  out.eta = std::exp2(u);
  out.value = objective(u);
  if (fbest < out.value) {
    out.value = fbest;
    out.eta = std::exp2(lo + (hi - lo) * best / n);
  }
  return out;
}

std::map<int, int> level_partition(const YoungFunction& psi, const YoungFunction& phi, double r, int k_lo,
                                   int k_hi) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("r must lie in (0, 1)");
  std::map<int, int> sizes;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double gap = psi.log2_at(k) - phi.log2_at(k);  // log2(psi/phi)
    int n = 0;
    if (gap <= std::log2(r)) n = static_cast<int>(std::floor(gap / std::log2(r) + 1e-12));
    ++sizes[n];
  }
  return sizes;
}

MonotonicityReport monotonicity_ratio(const std::vector<double>& p_list, const YoungFunction& psi,
                                      const YoungFunction& phi) {
  MonotonicityReport rep;
  std::vector<double> grid;
  for (int k = 1; k <= 40; ++k) grid.push_back(std::exp2(k));
  rep.little_o = little_o_check(psi, phi, grid).verdict;
  const IndexPair a = matuszewska_indices(psi);
  const IndexPair b = matuszewska_indices(phi);
  rep.upper_indices_match = std::abs(a.upper - b.upper) <= a.error_estimate + b.error_estimate + 1e-12;
  rep.partition_sizes = level_partition(psi, phi, 0.5, 0, 64);
  for (double p : p_list) {
    const double fpsi = constant_F_strong_infty(p, psi).value;
    const double fphi = constant_F_strong_infty(p, phi).value;
    rep.p.push_back(p);
    rep.ratios.push_back(fpsi / fphi);
  }
  rep.strictly_decreasing = rep.ratios.size() >= 2;
  for (std::size_t i = 1; i < rep.ratios.size(); ++i) {
    if (!(rep.ratios[i] < rep.ratios[i - 1])) rep.strictly_decreasing = false;
  }
  return rep;
}

GrowthFit growth_exponent_fit(const YoungFunction& phi, const std::vector<double>& p_grid) {
  if (p_grid.size() < 4) throw PreconditionError("growth fit needs at least four exponents");
  GrowthFit g;
  std::vector<double> x, y;
  for (double p : p_grid) {
    const double pp = conjugate_exponent(p);
    const double f = constant_F_strong_infty(p, phi).value;
    if (!std::isfinite(f)) throw DivergenceError("F is infinite on the grid");
    g.p.push_back(p);
    g.p_prime.push_back(pp);
    g.F.push_back(f);
    x.push_back(std::log(pp));
    y.push_back(std::log(f));
  }
  const LinearFit fit = least_squares(x, y);
  g.exponent = fit.slope;
  g.intercept = fit.intercept;
  g.rms_residual = fit.rms_residual;
  return g;
}

}  // namespace orlicz
