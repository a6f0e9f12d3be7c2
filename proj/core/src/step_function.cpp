#include "orlicz/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

StepFunction::StepFunction(std::vector<double> breaks, std::vector<double> values, double truncated_mass)
    : breaks_(std::move(breaks)), values_(std::move(values)), truncated_mass_(truncated_mass) {
  if (breaks_.size() != values_.size() + 1) throw DomainError("step function needs one more break than values");
  if (breaks_.front() != 0.0) throw DomainError("step function must start at 0");
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i] >= breaks_[i - 1])) throw DomainError("step function breaks must be non-decreasing");
  }
  if (breaks_.back() > 1.0 + 1e-12) throw DomainError("step function lives on [0, 1)");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] > values_[i - 1] * (1.0 + 1e-12) + 1e-300) {
      throw DomainError("step function values must be non-increasing");
    }
  }
}

StepFunction StepFunction::rearrangement(std::vector<double> values, std::vector<double> weights) {
  if (values.size() != weights.size()) throw DomainError("one weight per value required");
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<double> br{0.0}, vals;
  double s = 0.0;
  for (std::size_t i : idx) {
    s += weights[i];
    if (!vals.empty() && vals.back() == values[i]) {
      br.back() = s;
    } else {
      vals.push_back(values[i]);
      br.push_back(s);
    }
  }
  while (!vals.empty() && vals.back() == 0.0) {
    vals.pop_back();
    br.pop_back();
  }
  if (br.back() > 1.0) br.back() = 1.0;
  return StepFunction(std::move(br), std::move(vals));
}

StepFunction StepFunction::indicator(double length) {
  if (length <= 0.0) return StepFunction();
  return StepFunction({0.0, std::min(1.0, length)}, {1.0});
}

double StepFunction::operator()(double s) const {
  if (s < 0.0) throw DomainError("step function evaluated at negative s");
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
  if (i == 0 || i > values_.size()) return 0.0;
  return values_[i - 1];
}

double StepFunction::partial_integral(double s) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (s <= breaks_[i]) break;
    acc += values_[i] * (std::min(s, breaks_[i + 1]) - breaks_[i]);
  }
  return acc;
}

double StepFunction::integral() const { return partial_integral(kInf); }

double StepFunction::lp_norm(double p) const {
  if (!(p >= 1.0)) throw DomainError("L_p norm needs p >= 1");
  if (std::isinf(p)) return sup();
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc += std::pow(std::abs(values_[i]), p) * (breaks_[i + 1] - breaks_[i]);
  }
  return std::pow(acc, 1.0 / p);
}

double StepFunction::sup() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (breaks_[i + 1] > breaks_[i]) return values_[i];
  }
  return 0.0;
}

std::vector<double> merged_breaks(const StepFunction& f, const StepFunction& g) {
  std::vector<double> m;
  std::merge(f.breaks().begin(), f.breaks().end(), g.breaks().begin(), g.breaks().end(), std::back_inserter(m));
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

StepFunction StepFunction::operator+(const StepFunction& other) const {
  const auto m = merged_breaks(*this, other);
  std::vector<double> br{0.0}, vals;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i + 1] <= m[i]) continue;
    const double v = (*this)(m[i]) + other(m[i]);
    if (!vals.empty() && vals.back() == v) {
      br.back() = m[i + 1];
    } else {
      vals.push_back(v);
      br.push_back(m[i + 1]);
    }
  }
  StepFunction r;
  r.breaks_ = std::move(br);
  r.values_ = std::move(vals);
  r.truncated_mass_ = truncated_mass_ + other.truncated_mass_;
  return r;
}

StepFunction StepFunction::scaled(double c) const {
  if (c < 0.0) throw DomainError("scaling must be non-negative");
  StepFunction r = *this;
  for (double& v : r.values_) v *= c;
  r.truncated_mass_ *= c;
  return r;
}

StepFunction pointwise_max(const StepFunction& a, const StepFunction& b) {
  const auto m = merged_breaks(a, b);
  std::vector<double> br{0.0}, vals;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i + 1] <= m[i]) continue;
    const double v = std::max(a(m[i]), b(m[i]));
    if (!vals.empty() && vals.back() == v) {
      br.back() = m[i + 1];
    } else {
      vals.push_back(v);
      br.push_back(m[i + 1]);
    }
  }
  return StepFunction(std::move(br), std::move(vals), std::max(a.truncated_mass(), b.truncated_mass()));
}

StepFunction dilate(const StepFunction& f, double eta) {
  if (!(eta > 0.0)) throw DomainError("dilation factor must be positive");
  std::vector<double> br{0.0}, vals;
  double lost = f.truncated_mass() * eta;
  const auto& fb = f.breaks();
  const auto& fv = f.values();
  for (std::size_t i = 0; i < fv.size(); ++i) {
    const double a = fb[i] * eta, b = fb[i + 1] * eta;
    if (a >= 1.0) {
      lost += fv[i] * (b - a);
      continue;
    }
    if (b > 1.0) lost += fv[i] * (b - 1.0);
    vals.push_back(fv[i]);
    br.push_back(std::min(b, 1.0));
  }
  return StepFunction(std::move(br), std::move(vals), lost);
}

namespace {

// partial integrals of f at each point of the sorted list `at`
std::vector<double> partial_integrals(const StepFunction& f, const std::vector<double>& at) {
  std::vector<double> out;
  out.reserve(at.size());
  const auto& b = f.breaks();
  const auto& v = f.values();
  std::size_t i = 0;
  double done = 0.0;  // integral over [0, b[i]]
  for (double s : at) {
    while (i < v.size() && b[i + 1] <= s) {
      done += v[i] * (b[i + 1] - b[i]);
      ++i;
    }
    out.push_back(done + (i < v.size() && s > b[i] ? v[i] * (s - b[i]) : 0.0));
  }
  return out;
}

}  // namespace

bool majorizes(const StepFunction& f, const StepFunction& g, double tol) {
  const double scale = std::max({1.0, std::abs(f.integral()), std::abs(g.integral())});
  const auto at = merged_breaks(f, g);
  const auto fi = partial_integrals(f, at);
  const auto gi = partial_integrals(g, at);
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (fi[i] > gi[i] + tol * scale) return false;
  }
  return true;
}

bool pointwise_leq(const StepFunction& f, const StepFunction& g, double tol) {
  const double scale = std::max({1.0, std::abs(f.sup()), std::abs(g.sup())});
  const auto m = merged_breaks(f, g);
  // compare on the interior of every merged interval; slivers shorter than kSliver are rounding noise
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] >= 1.0 || m[i + 1] - m[i] <= kSliver) continue;
    const double s = 0.5 * (m[i] + m[i + 1]);
    if (f(s) > g(s) + tol * scale) return false;
  }
  const double last = m.back();
  if (last < 1.0 && f(last) > g(last) + tol * scale) return false;
  return true;
}

}  // namespace orlicz
