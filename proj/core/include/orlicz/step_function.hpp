#pragma once

#include <vector>

namespace orlicz {

// Right-continuous non-increasing step function on [0, 1):
// f = values[i] on [breaks[i], breaks[i+1]), zero from breaks.back() on.
// truncated_mass keeps the integral that a dilation pushed beyond 1.
class StepFunction {
 public:
  StepFunction() : breaks_{0.0} {}
  StepFunction(std::vector<double> breaks, std::vector<double> values, double truncated_mass = 0.0);

  // Non-increasing rearrangement of (value, weight) pairs; negative values are kept as given.
  static StepFunction rearrangement(std::vector<double> values, std::vector<double> weights);
  static StepFunction indicator(double length);

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }
  double truncated_mass() const { return truncated_mass_; }

  double operator()(double s) const;
  // integral over [0, s]
  double partial_integral(double s) const;
  double integral() const;
  double lp_norm(double p) const;
  double sup() const;

  StepFunction operator+(const StepFunction& other) const;
  StepFunction scaled(double c) const;

 private:
  std::vector<double> breaks_;  // size values_.size() + 1, starting at 0
  std::vector<double> values_;
  double truncated_mass_ = 0.0;
};

// Pointwise max of two non-increasing step functions.
StepFunction pointwise_max(const StepFunction& a, const StepFunction& b);

// (D_eta f)(s) = f(s / eta), truncated to [0, 1)
StepFunction dilate(const StepFunction& f, double eta);

// true iff f is majorized by g: int_0^s f <= int_0^s g for every s in [0, 1]
bool majorizes(const StepFunction& f, const StepFunction& g, double tol = 1e-12);

inline constexpr double kSliver = 1e-12;

// f <= g on every merged interval longer than kSliver
bool pointwise_leq(const StepFunction& f, const StepFunction& g, double tol = 1e-12);

std::vector<double> merged_breaks(const StepFunction& f, const StepFunction& g);

}  // namespace orlicz
