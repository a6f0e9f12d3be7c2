#pragma once

#include <map>
#include <string>
#include <vector>

namespace orlicz {

enum class YoungKind { power, llog, chi_infinity, custom };

// Descriptor for make_young. `param` is the exponent for power and alpha for llog.
struct YoungSpec {
  YoungKind kind = YoungKind::power;
  double param = 1.0;
  std::vector<double> log2_t;
  std::vector<double> log2_phi;
};

class YoungFunction {
 public:
  static YoungFunction power(double p);
  static YoungFunction llog(double alpha);
  static YoungFunction chi_infinity();
  // Samples (log2 t_i, log2 Phi(t_i)); linear in log-log space, end slopes extended.
  static YoungFunction custom(std::vector<double> log2_t, std::vector<double> log2_phi);

  YoungKind kind() const { return kind_; }
  double param() const { return param_; }
  const std::vector<double>& table_log2_t() const { return log2_t_; }
  const std::vector<double>& table_log2_phi() const { return log2_phi_; }

  double operator()(double t) const;
  // log2 Phi(2^x); -inf where Phi vanishes, +inf where Phi is infinite.
  double log2_at(double x) const;

  bool finite_everywhere() const { return kind_ != YoungKind::chi_infinity; }

  // log-log slope is non-increasing for x >= regular_above() and constant for x <= regular_below()
  double regular_above() const;
  double regular_below() const;

  std::string label() const;
  YoungSpec spec() const;

 private:
  YoungFunction(YoungKind kind, double param) : kind_(kind), param_(param) {}

  YoungKind kind_;
  double param_;
  std::vector<double> log2_t_;
  std::vector<double> log2_phi_;
};

YoungFunction make_young(const YoungSpec& spec);

// "power:2", "llog:1.5", "chi" / "chi_infinity".
YoungFunction parse_young(const std::string& text);

// M_Phi(t) = sup_s Phi(st)/Phi(s)
double eval_M(const YoungFunction& phi, double t);
// log2 M_Phi(2^x)
double log2_M(const YoungFunction& phi, double x);

struct IndexPair {
  double lower = 1.0;
  double upper = 1.0;
  double error_estimate = 0.0;
};

IndexPair matuszewska_indices(const YoungFunction& phi);

bool check_doubling(const YoungFunction& phi, int sample_count);

struct EnvelopeReport {
  double lower_constant = 0.0;  // sup min{t^{p-e}, t^{q+e}} / Phi(t)
  double upper_constant = 0.0;  // sup Phi(t) / max{t^{p-e}, t^{q+e}}
  bool bounded = false;
};

EnvelopeReport envelope_report(const YoungFunction& phi, double epsilon);
bool growth_envelope_check(const YoungFunction& phi, double epsilon);

struct LittleOReport {
  std::vector<double> t;
  std::vector<double> ratios;
  bool verdict = false;
};

// Relative drop required between the last two ratios for an o(.) verdict.
inline constexpr double kLittleODropThreshold = 1e-3;

LittleOReport little_o_check(const YoungFunction& psi, const YoungFunction& phi,
                             const std::vector<double>& t_grid);

// Convexity and monotonicity of Phi on the standard dyadic grid (midpoint test).
bool satisfies_young_invariants(const YoungFunction& phi);

}  // namespace orlicz
