#include "orlicz/proposition.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/spectral.hpp"

namespace orlicz {

double ProjectionChain::lambda(int k) const { return eta * std::exp2(-static_cast<double>(k)); }

double level_mass_bound(const YoungFunction& phi1, const YoungFunction& phi2, double eta, int k0, int k) {
  const double inv = std::exp2(static_cast<double>(k)) / eta;
  if (k <= k0) return phi2(inv);
  return phi2(std::exp2(static_cast<double>(k0)) / eta) + phi1(inv);
}

namespace {

Element clean_projection(const Element& e) { return apply(e, [](double v) { return v > 0.5 ? 1.0 : 0.0; }); }

}  // namespace

ProjectionChain weak_type_projection_chain(const Filtration& f, const Element& r, double eta, int k0,
                                           const YoungFunction& phi1, const YoungFunction& phi2, int k_min,
                                           int k_max) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  if (k_max <= k_min) throw DomainError("empty chain window");
  if (k0 < k_min || k0 > k_max) throw DomainError("k0 outside the chain window");
  if (!is_projection(r)) throw PreconditionError("r must be a projection");
  if (!std::isfinite(phi2(std::exp2(static_cast<double>(k0)) / eta))) {
    throw InfeasibleError("Phi2(1/lambda_k0) is infinite");
  }
  ProjectionChain c;
  c.eta = eta;
  c.k_min = k_min;
  c.k_max = k_max;
  c.k0 = k0;
  const bool commutative = f.algebra()->commutative();
  Element sup;
  if (commutative) sup = maximal_function(f, r);
  for (int k = k_min; k <= k_max; ++k) {
    const double lam = c.lambda(k);
    c.e.push_back(commutative ? spectral_projection(sup, Interval{-kInf, lam, true, false})
                              : cuculescu_projection(f, r, lam));
    if (k == k_min) {
      c.e_tilde.push_back(c.e.back());
    } else {
      c.e_tilde.push_back(meet(c.e_tilde.back(), c.e.back()));
    }
  }
  for (int k = k_min; k < k_max; ++k) {
    const Element diff = c.e_tilde_at(k) - c.e_tilde_at(k + 1);
    c.q.push_back(commutative ? diff : clean_projection(diff));
  }
  c.residual = trace(c.e_tilde.back());

  // level bounds
  const double tr = trace(r);
  const auto family = maximal_family(f, r);
  for (int k = k_min; k <= k_max; ++k) {
    const Element& et = c.e_tilde_at(k);
    double worst = 0.0;
    if (commutative) {
      const Eigen::VectorXd& s = sup.diagonal();
      const Eigen::VectorXd& m = et.diagonal();
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (m[i] > 0.5) worst = std::max(worst, s[i]);
      }
    } else {
      for (const auto& s : family) worst = std::max(worst, operator_norm(sandwich(et, s)));
    }
    c.level_ratio = std::max(c.level_ratio, worst / c.lambda(k));
    const double missing = 1.0 - trace(et);
    if (missing > 1e-14) {
      const double b = level_mass_bound(phi1, phi2, eta, k0, k);
      double factor = 0.0;
      if (b == 0.0 || tr == 0.0) {
        factor = kInf;
      } else if (std::isfinite(b)) {
        factor = missing / (b * tr);
      }
      c.mass_factor = std::max(c.mass_factor, factor);
    }
  }
  c.level_bound_ok = c.level_ratio <= 1.0 + 1e-8;
  c.mass_bound_ok = c.mass_factor <= kMassFactorBound * (1.0 + 1e-12);
  return c;
}

Element majorizer_z(const ProjectionChain& chain, const std::map<std::int64_t, double>& coefficients) {
  double inv_sum = 0.0;
  for (const auto& [k, v] : coefficients) {
    if (k < chain.k_min || k >= chain.k_max) continue;
    if (!(v > 0.0)) throw DomainError("coefficients must be positive");
    inv_sum += 1.0 / v;
  }
  Element acc = Element::zero(chain.e.front().algebra());
  for (int k = chain.k_min; k < chain.k_max; ++k) {
    const Element& q = chain.q_at(k);
    if (trace(q) <= 1e-14) continue;
    const auto it = coefficients.find(k);
    if (it == coefficients.end() || !std::isfinite(it->second)) {
      throw InfeasibleError("nonzero q_k without a finite coefficient");
    }
    acc = acc + q * (it->second * chain.lambda(k));
  }
  return acc * inv_sum;
}

Element majorizer_z(const ProjectionChain& chain, const CoefficientSequence& d) {
  return majorizer_z(chain, d.values);
}

PropositionReport verify_proposition(const Filtration& f, const Element& r, double p, const YoungFunction& phi1,
                                     const YoungFunction& phi2, double eta, int k_min, int k_max) {
  PropositionReport rep;
  rep.eta = eta;
  WindowOptions wo;
  wo.eta = eta;
  wo.k0_min = std::max(wo.k0_min, k_min);
  wo.k0_max = std::min(wo.k0_max, k_max - 1);
  const ConstantResult F = constant_F(p, phi1, phi2, wo);
  rep.k0 = F.argmin_k0;
  rep.F = F.value;
  rep.bracket = constant_F_at(p, phi1, phi2, rep.k0, wo).value;

  const ProjectionChain chain = weak_type_projection_chain(f, r, eta, rep.k0, phi1, phi2, k_min, k_max);
  rep.level_ratio = chain.level_ratio;
  rep.mass_factor = chain.mass_factor;
  rep.residual = chain.residual;
  rep.level_ok = chain.level_bound_ok && chain.mass_bound_ok;

  // coefficient on q_k is d_{k+1} of the optimal half-power sequence
  const CoefficientSequence d =
      optimal_dk(p, phi1, phi2, rep.k0, CoefficientVariant::half_power, k_min, k_max, eta);
  std::map<std::int64_t, double> shifted;
  for (const auto& [k, v] : d.values) {
    if (k - 1 >= k_min) shifted[k - 1] = v;
  }
  const Element z = majorizer_z(chain, shifted);
  rep.linf_z = operator_norm(z);
  rep.trace_z = trace(z);
  rep.lp_z = lp_norm(z, p);

  rep.threshold = -kDominationTol * rep.linf_z;
  rep.min_eigenvalue = kInf;
  for (const auto& s : maximal_family(f, r)) {
    const double m = min_eigenvalue(z - s);
    rep.min_eigenvalues.push_back(m);
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, m);
  }
  rep.domination_ok = rep.min_eigenvalue >= rep.threshold;

  // mu(z) against (sum 1/c) sum_k c_k lambda_k D_{2 B_{k+1}}(mu(r))
  double inv_sum = 0.0;
  for (const auto& [k, v] : shifted) {
    if (k < k_min || k >= k_max) continue;
    inv_sum += 1.0 / v;
  }
  const StepFunction mu_r = singular_numbers(r);
  StepFunction rhs;
  for (const auto& [k, v] : shifted) {
    if (k < k_min || k >= k_max) continue;
    const double b = 2.0 * level_mass_bound(phi1, phi2, eta, rep.k0, static_cast<int>(k) + 1);
    if (b == 0.0) continue;
    const StepFunction dil = std::isfinite(b) ? dilate(mu_r, b) : StepFunction::indicator(mu_r.integral() > 0 ? 1.0 : 0.0);
    rhs = rhs + dil.scaled(v * chain.lambda(static_cast<int>(k)));
  }
  rhs = rhs.scaled(inv_sum);
  rep.majorization_ok = majorizes(singular_numbers(z), rhs, 1e-12);

  rep.norm_ratio = rep.lp_z / lp_norm(r, p);
  rep.norm_bound = kNormBoundFactor * rep.bracket;
  rep.norm_ok = rep.norm_ratio <= rep.norm_bound;
  return rep;
}

}  // namespace orlicz
