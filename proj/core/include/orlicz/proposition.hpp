#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orlicz/filtration.hpp"
#include "orlicz/interp.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// lambda_k = eta 2^{-k} on k in [k_min, k_max]; e_k witnesses, running meets e~_k,
// and q_k = e~_k - e~_{k+1} for k < k_max.
struct ProjectionChain {
  double eta = 1.0;
  int k_min = -32;
  int k_max = 32;
  int k0 = 0;
  std::vector<Element> e;
  std::vector<Element> e_tilde;
  std::vector<Element> q;
  double residual = 0.0;  // tau(e~_{k_max}), stand-in for the limit projection

  // level bounds: max ||e~_k S_n(r) e~_k|| / lambda_k and max tau(1 - e~_k) / (B_k tau(r))
  double level_ratio = 0.0;
  double mass_factor = 0.0;
  bool level_bound_ok = false;
  bool mass_bound_ok = false;

  double lambda(int k) const;
  const Element& e_at(int k) const { return e.at(static_cast<std::size_t>(k - k_min)); }
  const Element& e_tilde_at(int k) const { return e_tilde.at(static_cast<std::size_t>(k - k_min)); }
  const Element& q_at(int k) const { return q.at(static_cast<std::size_t>(k - k_min)); }
};

inline constexpr double kMassFactorBound = 2.0;

// B_k = Phi2(1/lambda_k) for k <= k0, Phi2(1/lambda_k0) + Phi1(1/lambda_k) otherwise
double level_mass_bound(const YoungFunction& phi1, const YoungFunction& phi2, double eta, int k0, int k);

ProjectionChain weak_type_projection_chain(const Filtration& f, const Element& r, double eta, int k0,
                                           const YoungFunction& phi1, const YoungFunction& phi2, int k_min = -32,
                                           int k_max = 32);

// z = (sum_k 1/c_k) sum_k c_k lambda_k q_k over the chain window; c_k indexed like q_k
Element majorizer_z(const ProjectionChain& chain, const std::map<std::int64_t, double>& coefficients);
Element majorizer_z(const ProjectionChain& chain, const CoefficientSequence& d);

struct PropositionReport {
  int k0 = 0;
  double eta = 1.0;
  double F = 0.0;        // inf over k0
  double bracket = 0.0;  // the bracket of the bound at the chosen k0 and eta
  // (i)
  double level_ratio = 0.0;
  double mass_factor = 0.0;
  double residual = 0.0;
  bool level_ok = false;
  // (ii)
  std::vector<double> min_eigenvalues;  // per family member
  double min_eigenvalue = 0.0;
  double threshold = 0.0;
  bool domination_ok = false;
  // (iii)
  bool majorization_ok = false;
  // (iv)
  double norm_ratio = 0.0;  // ||z||_p / ||r||_p
  double norm_bound = 0.0;  // 4 * bracket
  bool norm_ok = false;
  double trace_z = 0.0;
  double lp_z = 0.0;
  double linf_z = 0.0;
  bool passed() const { return level_ok && domination_ok && majorization_ok && norm_ok; }
};

inline constexpr double kNormBoundFactor = 4.0;
inline constexpr double kDominationTol = 1e-8;

PropositionReport verify_proposition(const Filtration& f, const Element& r, double p, const YoungFunction& phi1,
                                     const YoungFunction& phi2, double eta, int k_min = -32, int k_max = 32);

}  // namespace orlicz
