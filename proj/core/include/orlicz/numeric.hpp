#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// log2(2^a + 2^b) without overflow; -inf acts as the additive zero.
double log2_add(double a, double b);

/// Conjugate exponent p' = p / (p - 1).
double conjugate_exponent(double p);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

/// Ordinary least squares y ~ intercept + slope * x.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace orlicz
