#include "orlicz/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

struct BlockEig {
  std::vector<Eigen::VectorXd> vals;
  std::vector<Eigen::MatrixXcd> vecs;
};

BlockEig eig(const Element& x) {
  BlockEig out;
  if (x.is_diagonal()) {
    out.vals.push_back(x.diagonal());
    return out;
  }
  const auto& bl = x.algebra()->blocks();
  const auto& off = x.algebra()->offsets();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x.matrix().block(off[b], off[b], bl[b], bl[b]));
    out.vals.push_back(es.eigenvalues());
    out.vecs.push_back(es.eigenvectors());
  }
  return out;
}

Element rebuild(const Element& x, const BlockEig& e, const std::function<double(double)>& f) {
  if (x.is_diagonal()) return Element(x.algebra(), Eigen::VectorXd(e.vals[0].unaryExpr(f)));
  const int d = x.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const auto& bl = x.algebra()->blocks();
  const auto& off = x.algebra()->offsets();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    const Eigen::VectorXd fv = e.vals[b].unaryExpr(f);
    const auto& v = e.vecs[b];
    m.block(off[b], off[b], bl[b], bl[b]) = v * fv.cast<std::complex<double>>().asDiagonal() * v.adjoint();
  }
  return Element::from_hermitian_part(x.algebra(), m);
}

double max_entry_of(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

Spectrum spectrum(const Element& x) {
  const BlockEig e = eig(x);
  Spectrum s;
  const auto& w = x.algebra()->weights();
  if (x.is_diagonal()) {
    s.values.assign(e.vals[0].data(), e.vals[0].data() + e.vals[0].size());
    s.weights = w;
    return s;
  }
  const auto& off = x.algebra()->offsets();
  for (std::size_t b = 0; b < e.vals.size(); ++b) {
    for (Eigen::Index i = 0; i < e.vals[b].size(); ++i) {
      s.values.push_back(e.vals[b][i]);
      s.weights.push_back(w[off[b] + i]);
    }
  }
  return s;
}

double min_eigenvalue(const Element& x) {
  const Spectrum s = spectrum(x);
  return s.values.empty() ? 0.0 : *std::min_element(s.values.begin(), s.values.end());
}

double operator_norm(const Element& x) {
  double m = 0.0;
  for (double v : spectrum(x).values) m = std::max(m, std::abs(v));
  return m;
}

double trace(const Element& x) {
  const auto& w = x.algebra()->weights();
  const Eigen::VectorXd d = x.diagonal_entries();
  double t = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) t += w[i] * d[i];
  return t;
}

double lp_norm(const Element& x, double p) {
  if (!(p >= 1.0)) throw DomainError("L_p norm needs p >= 1");
  if (std::isinf(p)) return operator_norm(x);
  const Spectrum s = spectrum(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i) acc += s.weights[i] * std::pow(std::abs(s.values[i]), p);
  return std::pow(acc, 1.0 / p);
}

Element apply(const Element& x, const std::function<double(double)>& f) { return rebuild(x, eig(x), f); }

Element spectral_projection(const Element& x, const Interval& iv, bool* degenerate) {
  bool snapped = false;
  auto inside = [&](double v) {
    const double tlo = kBoundarySnap * std::max(1.0, std::abs(iv.lo));
    const double thi = kBoundarySnap * std::max(1.0, std::abs(iv.hi));
    if (std::isfinite(iv.lo) && std::abs(v - iv.lo) <= tlo) {
      snapped = true;
      return iv.lo_open ? 0.0 : 1.0;
    }
    if (std::isfinite(iv.hi) && std::abs(v - iv.hi) <= thi) {
      snapped = true;
      return iv.hi_open ? 0.0 : 1.0;
    }
    return (v > iv.lo && v < iv.hi) ? 1.0 : 0.0;
  };
  Element p = apply(x, inside);
  if (degenerate) *degenerate = snapped;
  return p;
}

bool is_projection(const Element& e, double tol) {
  if (e.is_diagonal()) {
    for (Eigen::Index i = 0; i < e.diagonal().size(); ++i) {
      const double v = e.diagonal()[i];
      if (std::abs(v * v - v) > tol) return false;
    }
    return true;
  }
  const Eigen::MatrixXcd& m = e.matrix();
  return max_entry_of(m * m - m) <= tol && max_entry_of(m - m.adjoint()) <= 1e-12;
}

StepFunction singular_numbers(const Element& x) {
  Spectrum s = spectrum(x);
  for (double& v : s.values) v = std::abs(v);
  return StepFunction::rearrangement(std::move(s.values), std::move(s.weights));
}

double distribution(const Element& x, double s) {
  const Spectrum sp = spectrum(x);
  double t = 0.0;
  for (std::size_t i = 0; i < sp.values.size(); ++i) {
    if (std::abs(sp.values[i]) > s) t += sp.weights[i];
  }
  return t;
}

bool psd_leq(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return min_eigenvalue(b - a) >= -1e-9 * std::max(1.0, operator_norm(b));
}

Element meet(const Element& e, const Element& f) {
  require_same_algebra(e, f);
  if (e.is_diagonal()) return Element(e.algebra(), Eigen::VectorXd(e.diagonal().cwiseMin(f.diagonal())));
  // ran(e) and ran(f) intersect in ker(2 - e - f)
  const Element a = Element::identity(e.algebra()) * 2.0 - e - f;
  return apply(a, [](double v) { return v <= 1e-10 ? 1.0 : 0.0; });
}

BinaryDecomposition binary_decomposition(const Element& x, int n_min, int n_max) {
  if (n_max < n_min) throw DomainError("empty digit window");
  const BlockEig e = eig(x);
  const double top = std::ldexp(1.0, -n_min + 1);
  for (const auto& v : e.vals) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] < -1e-10) throw DomainError("binary decomposition needs a positive element");
      if (v[i] >= top) throw DomainError("eigenvalue outside the digit window");
    }
  }
  auto digit = [](double v, int n) {
    if (v <= 0.0) return 0.0;
    return std::fmod(std::floor(std::ldexp(v, n)), 2.0);
  };
  BinaryDecomposition out;
  out.n_min = n_min;
  out.n_max = n_max;
  for (const auto& v : e.vals) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      double rec = 0.0;
      for (int n = n_min; n <= n_max; ++n) rec += digit(v[i], n) * std::ldexp(1.0, -n);
      out.residual = std::max(out.residual, std::max(0.0, v[i]) - rec);
    }
  }
  Element sum = Element::zero(x.algebra());
  for (int n = n_min; n <= n_max; ++n) {
    bool any = false;
    for (const auto& v : e.vals) {
      for (Eigen::Index i = 0; i < v.size() && !any; ++i) any = digit(v[i], n) == 1.0;
    }
    if (!any) continue;
    Element r = rebuild(x, e, [&](double v) { return digit(v, n); });
    sum = sum + r * std::ldexp(1.0, -n);
    out.projections.emplace_back(n, std::move(r));
  }
  out.matrix_residual = operator_norm(x - sum);
  return out;
}

SandwichReport binary_sandwich(const Element& x, const BinaryDecomposition& dec, double alpha, double tol) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  SandwichReport rep;
  rep.alpha = alpha;
  const StepFunction mu_xa = singular_numbers(apply(x, [&](double v) { return std::pow(std::max(0.0, v), alpha); }));
  StepFunction sum;
  for (const auto& [n, r] : dec.projections) {
    sum = sum + StepFunction::indicator(trace(r)).scaled(std::pow(2.0, -n * alpha));
  }
  rep.lower_majorization = majorizes(mu_xa, sum, tol);
  rep.upper_pointwise = pointwise_leq(sum, mu_xa.scaled(1.0 / (1.0 - std::pow(2.0, -alpha))), tol);
  return rep;
}

DominationReport diagonal_domination_check(const std::vector<Element>& q, const std::vector<double>& d,
                                           const Element& x) {
  if (q.size() != d.size()) throw DomainError("one coefficient per projection required");
  for (double v : d) {
    if (!(v > 0.0) || !std::isfinite(v)) throw PreconditionError("coefficients must be positive and finite");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    require_same_algebra(q[i], x);
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      const Eigen::MatrixXcd prod = q[i].dense() * q[j].dense();
      if (max_entry_of(prod) > 1e-10) throw PreconditionError("projections are not disjoint");
    }
  }
  Element big_q = Element::zero(x.algebra());
  Element rhs = Element::zero(x.algebra());
  double inv_sum = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    big_q = big_q + q[k];
    rhs = rhs + sandwich(q[k], x) * d[k];
    inv_sum += 1.0 / d[k];
  }
  const Element lhs = sandwich(big_q, x);
  DominationReport rep;
  rep.min_eigenvalue = min_eigenvalue(rhs * inv_sum - lhs);
  rep.threshold = -1e-9 * operator_norm(x);
  rep.passed = rep.min_eigenvalue >= rep.threshold;
  return rep;
}

bool corner_identity_check(const Element& s, const Element& e) {
  require_same_algebra(s, e);
  const Element e_perp = Element::identity(e.algebra()) - e;
  if (sandwich(e_perp, s).max_abs_entry() > 1e-10) {
    throw PreconditionError("corner hypothesis e' S e' = 0 does not hold");
  }
  return (s - sandwich(e, s)).max_abs_entry() <= 1e-8 * operator_norm(s);
}

}  // namespace orlicz
