#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

using ZSequence = std::function<double(std::int64_t)>;

// a #_{k0} b : a_k for k <= k0, a_{k0} + b_k for k > k0
ZSequence concatenate(ZSequence a, ZSequence b, std::int64_t k0);

struct ConstantResult {
  double value = 0.0;
  int argmin_k0 = 0;
  std::int64_t k_min = 0;  // truncation bounds actually summed
  std::int64_t k_max = 0;
  double tail_estimate = 0.0;  // absolute bound on the omitted tails, in units of value
};

struct WindowOptions {
  int k0_min = -32;
  int k0_max = 32;
  std::int64_t half_window = 64;  // every series is summed at least over [-half_window, half_window]
  // level scale: lambda_k = eta 2^{-k}; terms become lambda_k^q (Phi2 #_{k0} Phi1)(1/lambda_k)^{q/p}
  double eta = 1.0;
};

// Throws DivergenceError unless q_{phi1} < p < p_{phi2} (within the index error estimates).
void check_index_gate(double p, const YoungFunction& phi1, const YoungFunction& phi2);

ConstantResult constant_F(double p, const YoungFunction& phi1, const YoungFunction& phi2,
                          const WindowOptions& opt = {});
ConstantResult constant_F_at(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                             const WindowOptions& opt = {});
ConstantResult constant_G(double p, const YoungFunction& phi1, const YoungFunction& phi2,
                          const WindowOptions& opt = {});
ConstantResult constant_G_at(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                             const WindowOptions& opt = {});
// (sum_{k>=0} 2^{-k/2} Phi(2^k)^{1/2p})^2
ConstantResult constant_F_strong_infty(double p, const YoungFunction& phi, const WindowOptions& opt = {});

// inf over k0 of the l_{1/2} quasi-norm of (2^{-k}(Phi2 #_{k0} Phi1)(2^k)^{1/p})_k over a finite window,
// the rewritten form of F, with no tail handling
double concatenated_quasi_norm(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                               std::int64_t k_lo, std::int64_t k_hi, double q);

enum class CoefficientVariant { half_power, p_over_p_plus_one };

struct CoefficientSequence {
  CoefficientVariant variant = CoefficientVariant::half_power;
  int k0 = 0;
  double eta = 1.0;
  std::map<std::int64_t, double> values;  // only indices where d_k is finite
};

CoefficientSequence optimal_dk(double p, const YoungFunction& phi1, const YoungFunction& phi2, int k0,
                               CoefficientVariant variant, std::int64_t k_min, std::int64_t k_max,
                               double eta = 1.0);

struct GeometricMean {
  double value = 0.0;
  double eta = 0.0;
};

// inf_{eta} eta M_{Phi1}(C1/eta)^{1/p} + eta M_{Phi2}(C2/eta)^{1/p}; for Phi2 = chi the second
// term is dropped and eta ranges over (C2, inf).
GeometricMean geometric_mean_factor(double p, const YoungFunction& phi1, const YoungFunction& phi2, double c1,
                                    double c2);

struct MonotonicityReport {
  std::vector<double> p;
  std::vector<double> ratios;
  bool strictly_decreasing = false;
  bool little_o = false;
  bool upper_indices_match = false;
  std::map<int, int> partition_sizes;  // n -> |E_n(1/2)| over k in [0, 64]
  bool preconditions_hold() const { return little_o && upper_indices_match; }
};

MonotonicityReport monotonicity_ratio(const std::vector<double>& p_list, const YoungFunction& psi,
                                      const YoungFunction& phi);

// sizes of E_n(r) = {k : r^{n+1} phi(2^k) < psi(2^k) <= r^n phi(2^k)} (E_0 = A_1^c) for k in [k_lo, k_hi]
std::map<int, int> level_partition(const YoungFunction& psi, const YoungFunction& phi, double r, int k_lo,
                                   int k_hi);

struct GrowthFit {
  std::vector<double> p;
  std::vector<double> p_prime;
  std::vector<double> F;
  double exponent = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

GrowthFit growth_exponent_fit(const YoungFunction& phi, const std::vector<double>& p_grid);

}  // namespace orlicz
