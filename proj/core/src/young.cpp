#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

double table_log2(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  const std::size_t n = xs.size();
  if (x <= xs.front()) {
    const double slope = (ys[1] - ys[0]) / (xs[1] - xs[0]);
    return ys[0] + slope * (x - xs[0]);
  }
  if (x >= xs.back()) {
    const double slope = (ys[n - 1] - ys[n - 2]) / (xs[n - 1] - xs[n - 2]);
    return ys[n - 1] + slope * (x - xs[n - 1]);
  }
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs.begin());
  const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + w * (ys[i] - ys[i - 1]);
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("power exponent must be >= 1");
  return YoungFunction(YoungKind::power, p);
}

YoungFunction YoungFunction::llog(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("llog alpha must be >= 0");
  return YoungFunction(YoungKind::llog, alpha);
}

YoungFunction YoungFunction::chi_infinity() { return YoungFunction(YoungKind::chi_infinity, 0.0); }

YoungFunction YoungFunction::custom(std::vector<double> log2_t, std::vector<double> log2_phi) {
  if (log2_t.size() != log2_phi.size() || log2_t.size() < 2) {
    throw DomainError("custom Young table needs at least two (log2_t, log2_phi) samples");
  }
  for (std::size_t i = 0; i < log2_t.size(); ++i) {
    if (!std::isfinite(log2_t[i]) || !std::isfinite(log2_phi[i])) {
      throw DomainError("custom Young table entries must be finite");
    }
    if (i > 0 && !(log2_t[i] > log2_t[i - 1])) {
      throw DomainError("custom Young abscissae must be strictly increasing");
    }
    if (i > 0 && log2_phi[i] < log2_phi[i - 1]) {
      throw DomainError("custom Young samples are not monotone");
    }
  }
  YoungFunction f(YoungKind::custom, 0.0);
  f.log2_t_ = std::move(log2_t);
  f.log2_phi_ = std::move(log2_phi);
  const std::size_t n = f.log2_t_.size();
  const double lo = (f.log2_phi_[1] - f.log2_phi_[0]) / (f.log2_t_[1] - f.log2_t_[0]);
  const double hi = (f.log2_phi_[n - 1] - f.log2_phi_[n - 2]) / (f.log2_t_[n - 1] - f.log2_t_[n - 2]);
  // slope >= 1 at both ends: Phi(t)/t non-decreasing, Phi(0+)=0, Phi(inf)=inf
  if (lo < 1.0 || hi < 1.0) throw DomainError("custom Young table end slopes must be >= 1");
  if (!satisfies_young_invariants(f)) throw DomainError("custom Young table is not convex");
  return f;
}

double YoungFunction::operator()(double t) const {
  if (std::isnan(t) || t < 0.0) throw DomainError("Young function evaluated at negative t");
  if (t == 0.0) return 0.0;
  switch (kind_) {
    case YoungKind::power:
      return std::pow(t, param_);
    case YoungKind::llog:
      return t <= 1.0 ? t : t * std::pow(1.0 + std::log2(t), param_);
    case YoungKind::chi_infinity:
      return t <= 1.0 ? 0.0 : kInf;
    case YoungKind::custom:
      return std::exp2(log2_at(std::log2(t)));
  }
  return 0.0;
}

double YoungFunction::log2_at(double x) const {
  if (x == -kInf) return -kInf;
  switch (kind_) {
    case YoungKind::power:
      return param_ * x;
    case YoungKind::llog:
      return x <= 0.0 ? x : x + param_ * std::log2(1.0 + x);
    case YoungKind::chi_infinity:
      return x <= 0.0 ? -kInf : kInf;
    case YoungKind::custom:
      return table_log2(log2_t_, log2_phi_, x);
  }
  return 0.0;
}

double YoungFunction::regular_above() const {
  if (kind_ == YoungKind::custom) return log2_t_.back();
  return 0.0;
}

double YoungFunction::regular_below() const {
  if (kind_ == YoungKind::custom) return log2_t_.front();
  return 0.0;
}

std::string YoungFunction::label() const {
  switch (kind_) {
    case YoungKind::power:
      return "power:" + format_number(param_);
    case YoungKind::llog:
      return "llog:" + format_number(param_);
    case YoungKind::chi_infinity:
      return "chi";
    case YoungKind::custom:
      return "custom:" + std::to_string(log2_t_.size());
  }
  return "";
}

YoungSpec YoungFunction::spec() const {
  YoungSpec s;
  s.kind = kind_;
  s.param = param_;
  s.log2_t = log2_t_;
  s.log2_phi = log2_phi_;
  return s;
}

YoungFunction make_young(const YoungSpec& spec) {
  switch (spec.kind) {
    case YoungKind::power:
      return YoungFunction::power(spec.param);
    case YoungKind::llog:
      return YoungFunction::llog(spec.param);
    case YoungKind::chi_infinity:
      return YoungFunction::chi_infinity();
    case YoungKind::custom:
      return YoungFunction::custom(spec.log2_t, spec.log2_phi);
  }
  throw DomainError("unknown Young kind");
}

YoungFunction parse_young(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (kind == "chi" || kind == "chi_infinity") return YoungFunction::chi_infinity();
  if (colon == std::string::npos) throw DomainError("Young descriptor needs a parameter: " + text);
  const std::string arg = text.substr(colon + 1);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw DomainError("bad Young parameter: " + text);
  }
  if (kind == "power") return YoungFunction::power(value);
  if (kind == "llog") return YoungFunction::llog(value);
  throw DomainError("unknown Young kind: " + kind);
}

double log2_M(const YoungFunction& phi, double x) {
  if (!phi.finite_everywhere()) throw UnsupportedError("M_Phi is undefined for infinite-valued Young functions");
  switch (phi.kind()) {
    case YoungKind::power:
      return phi.param() * x;
    case YoungKind::llog:
      // sup attained at s = 1 for t >= 1 and on s <= 1 for t < 1, so M = Phi
      return phi.log2_at(x);
    case YoungKind::chi_infinity:
      break;
    case YoungKind::custom: {
      // log2 Phi(y + x) - log2 Phi(y) is piecewise linear in y: breakpoints plus the two end limits suffice
      const auto& bs = phi.table_log2_t();
      std::vector<double> ys;
      for (double b : bs) {
        ys.push_back(b);
        ys.push_back(b - x);
      }
      ys.push_back(bs.front() - std::abs(x) - 1.0);
      ys.push_back(bs.back() + std::abs(x) + 1.0);
      for (int k = -60; k <= 60; ++k) ys.push_back(k);
      double best = -kInf;
      for (double y : ys) best = std::max(best, phi.log2_at(y + x) - phi.log2_at(y));
      return best;
    }
  }
  throw UnsupportedError("M_Phi is undefined for infinite-valued Young functions");
}

double eval_M(const YoungFunction& phi, double t) {
  if (!phi.finite_everywhere()) throw UnsupportedError("M_Phi is undefined for infinite-valued Young functions");
  if (!(t > 0.0)) throw DomainError("M_Phi requires t > 0");
  if (phi.kind() == YoungKind::power) return std::pow(t, phi.param());
  if (phi.kind() == YoungKind::llog) return phi(t);
  return std::exp2(log2_M(phi, std::log2(t)));
}

IndexPair matuszewska_indices(const YoungFunction& phi) {
  if (!phi.finite_everywhere()) throw UnsupportedError("indices need a finite Young function");
  if (phi.kind() == YoungKind::power) return {phi.param(), phi.param(), 0.0};

  const double ms[] = {10.0, 20.0, 30.0, 40.0};
  const double inv[] = {1.0 / 10, 1.0 / 20, 1.0 / 30, 1.0 / 40};
  auto slopes_at = [&](double sign) {
    std::vector<double> s;
    for (double m : ms) {
      const double x = sign * m;
      s.push_back((log2_M(phi, x + 1.0) - log2_M(phi, x - 1.0)) / 2.0);
    }
    return s;
  };
  auto extrapolate = [&](const std::vector<double>& s, double& err) {
    const auto fit = least_squares(inv, s);
    const double r1 = (20.0 * s[1] - 10.0 * s[0]) / 10.0;
    const double r2 = (40.0 * s[3] - 20.0 * s[1]) / 20.0;
    err = std::max(err, std::abs(r2 - r1));
    return fit.intercept;
  };
  IndexPair out;
  double err = 0.0;
  out.lower = extrapolate(slopes_at(-1.0), err);
  out.upper = extrapolate(slopes_at(1.0), err);
  out.error_estimate = err;
  return out;
}

bool check_doubling(const YoungFunction& phi, int sample_count) {
  if (sample_count <= 0) throw DomainError("sample_count must be positive");
  const double g = 1.32471795724474602596;
  const double a1 = 1.0 / g, a2 = 1.0 / (g * g);
  const double slack = std::log2(1.0 + 1e-9);
  for (int i = 0; i < sample_count; ++i) {
    const double u = std::fmod(0.5 + a1 * i, 1.0);
    const double v = std::fmod(0.5 + a2 * i, 1.0);
    const double x = -30.0 + 60.0 * u;
    const double y = -30.0 + 60.0 * v;
    const double lhs = phi.log2_at(x + y);
    const double rhs = log2_M(phi, x) + phi.log2_at(y) + slack;
    if (lhs > rhs) return false;
  }
  return true;
}

EnvelopeReport envelope_report(const YoungFunction& phi, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("growth envelope requires epsilon > 0");
  const IndexPair ix = matuszewska_indices(phi);
  const double lo_e = ix.lower - epsilon, hi_e = ix.upper + epsilon;
  std::vector<double> lower_r, upper_r;
  for (int k = -40; k <= 40; ++k) {
    const double lp = phi.log2_at(k);
    lower_r.push_back(std::min(k * lo_e, k * hi_e) - lp);
    upper_r.push_back(lp - std::max(k * lo_e, k * hi_e));
  }
  auto tame = [](const std::vector<double>& r) {
    const std::size_t n = r.size();
    const double tol = 1e-12;
    for (double v : r) {
      if (!std::isfinite(v)) return false;
    }
    // the sup over the grid is a genuine constant only if the ratio does not grow towards either edge
    return r[0] <= r[1] + tol && r[n - 1] <= r[n - 2] + tol;
  };
  EnvelopeReport rep;
  rep.lower_constant = std::exp2(*std::max_element(lower_r.begin(), lower_r.end()));
  rep.upper_constant = std::exp2(*std::max_element(upper_r.begin(), upper_r.end()));
  rep.bounded = tame(lower_r) && tame(upper_r);
  return rep;
}

bool growth_envelope_check(const YoungFunction& phi, double epsilon) {
  return envelope_report(phi, epsilon).bounded;
}

LittleOReport little_o_check(const YoungFunction& psi, const YoungFunction& phi,
                             const std::vector<double>& t_grid) {
  LittleOReport rep;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("little-o grid must be positive");
    const double a = psi.log2_at(std::log2(t));
    const double b = phi.log2_at(std::log2(t));
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("little-o check needs finite positive values");
    rep.t.push_back(t);
    rep.ratios.push_back(std::exp2(a - b));
  }
  const auto& r = rep.ratios;
  if (r.size() < 2) return rep;
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] > r[i - 1] * (1.0 + 1e-12)) return rep;
  }
  const double drop = (r[r.size() - 2] - r.back()) / r[r.size() - 2];
  rep.verdict = drop > kLittleODropThreshold;
  return rep;
}

bool satisfies_young_invariants(const YoungFunction& phi) {
  if (phi(0.0) != 0.0) return false;
  double prev = 0.0;
  for (int k = -160; k <= 160; ++k) {
    const double t = std::exp2(k / 4.0);
    const double v = phi(t);
    if (v < prev) return false;
    prev = v;
  }
  for (int k = -160; k < 160; ++k) {
    for (int step : {1, 4}) {
      const double a = std::exp2(k / 4.0);
      const double b = std::exp2((k + step) / 4.0);
      const double mid = phi(0.5 * (a + b));
      const double avg = 0.5 * (phi(a) + phi(b));
      if (mid > avg * (1.0 + 1e-12)) return false;
    }
  }
  const double top = phi(std::exp2(40.0));
  return std::isinf(top) || top > phi(std::exp2(39.0));
}

}  // namespace orlicz
