#include "orlicz/filtration.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/random.hpp"
#include "orlicz/spectral.hpp"

namespace orlicz {

namespace {

const char* kind_name(FiltrationKind k) {
  switch (k) {
    case FiltrationKind::dyadic:
      return "dyadic";
    case FiltrationKind::matrix:
      return "matrix";
    case FiltrationKind::tensor:
      return "tensor";
  }
  return "?";
}

// basis indices with the bits of `a` deposited at `bits` (bits[0] receives the top bit of a)
std::vector<std::int64_t> deposit_table(const std::vector<int>& bits) {
  const std::size_t n = bits.size();
  std::vector<std::int64_t> out(std::size_t{1} << n, 0);
  for (std::size_t a = 0; a < out.size(); ++a) {
    std::int64_t v = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if ((a >> (n - 1 - j)) & 1U) v |= std::int64_t{1} << bits[j];
    }
    out[a] = v;
  }
  return out;
}

}  // namespace

void Filtration::build_algebra() {
  if (quantum_ == 0) {
    algebra_ = TracialAlgebra::diagonal(1 << classical_);
  } else if (classical_ == 0) {
    algebra_ = TracialAlgebra::full(1 << quantum_);
  } else {
    algebra_ = TracialAlgebra::block_diagonal(std::vector<int>(std::size_t{1} << classical_, 1 << quantum_));
  }
}

Filtration Filtration::dyadic(int N) {
  if (N < 1 || N > 24) throw DomainError("dyadic filtration depth must lie in [1, 24]");
  Filtration f;
  f.kind_ = f.first_kind_ = FiltrationKind::dyadic;
  f.depth_[0] = N;
  f.classical_ = N;
  f.build_algebra();
  for (int n = 0; n <= N; ++n) f.levels_.push_back({n, 0});
  return f;
}

Filtration Filtration::matrix(int N) {
  if (N < 1 || N > 6) throw DomainError("matrix filtration depth must lie in [1, 6]");
  Filtration f;
  f.kind_ = f.first_kind_ = FiltrationKind::matrix;
  f.depth_[0] = N;
  f.quantum_ = N;
  f.build_algebra();
  for (int n = 0; n <= N; ++n) f.levels_.push_back({n, 0});
  if (!verify_filtration(f, 0, kConstructionTrials).passed) throw Error("matrix filtration failed its invariants");
  return f;
}

Filtration Filtration::tensor(const Filtration& first, const Filtration& second) {
  if (first.doubly_indexed() || second.doubly_indexed()) {
    throw UnsupportedError("tensor products of tensor filtrations are not supported");
  }
  Filtration f;
  f.kind_ = FiltrationKind::tensor;
  f.first_kind_ = first.kind_;
  f.second_kind_ = second.kind_;
  f.depth_[0] = first.depth_[0];
  f.depth_[1] = second.depth_[0];
  f.classical_ = first.classical_ + second.classical_;
  f.quantum_ = first.quantum_ + second.quantum_;
  if (f.quantum_ == 0 && f.classical_ > 24) throw DomainError("commutative tensor dimension exceeds 2^24");
  if (f.quantum_ > 0 && f.classical_ + f.quantum_ > 12) throw DomainError("matrix tensor dimension exceeds 2^12");
  // classical registers first: a matrix (x) dyadic product is stored as dyadic (x) matrix
  if (first.kind_ == FiltrationKind::matrix && second.kind_ == FiltrationKind::dyadic) {
    f.offset_[1] = 0;
    f.offset_[0] = f.depth_[1];
  } else {
    f.offset_[0] = 0;
    f.offset_[1] = f.depth_[0];
  }
  f.build_algebra();
  for (int n = 0; n <= f.depth_[0]; ++n) {
    for (int m = 0; m <= f.depth_[1]; ++m) f.levels_.push_back({n, m});
  }
  return f;
}

std::string Filtration::label() const {
  if (!doubly_indexed()) return std::string(kind_name(kind_)) + ":" + std::to_string(depth_[0]);
  return std::string(kind_name(first_kind_)) + ":" + std::to_string(depth_[0]) + "x" + kind_name(second_kind_) + ":" +
         std::to_string(depth_[1]);
}

void Filtration::check_level(const FiltrationLevel& level) const {
  if (level.n < 0 || level.n > depth_[0]) throw DomainError("level n out of range");
  const int mmax = doubly_indexed() ? depth_[1] : 0;
  if (level.m < 0 || level.m > mmax) throw DomainError("level m out of range");
}

Element Filtration::expect(const Element& x, const FiltrationLevel& level) const {
  check_level(level);
  if (!x.algebra()->same_as(*algebra_)) throw DomainError("element does not belong to the filtration algebra");
  const int Q = classical_ + quantum_;
  std::vector<int> kept, traced;
  const int nf = doubly_indexed() ? 2 : 1;
  for (int f = 0; f < nf; ++f) {
    const int keep = f == 0 ? level.n : level.m;
    for (int j = 0; j < depth_[f]; ++j) {
      const int bit = Q - 1 - (offset_[f] + j);
      (j < keep ? kept : traced).push_back(bit);
    }
  }
  const auto ki = deposit_table(kept);
  const auto ti = deposit_table(traced);
  const double inv = 1.0 / static_cast<double>(ti.size());
  if (x.is_diagonal()) {
    const Eigen::VectorXd& v = x.diagonal();
    Eigen::VectorXd out(v.size());
    for (std::int64_t a : ki) {
      double s = 0.0;
      for (std::int64_t t : ti) s += v[a | t];
      s *= inv;
      for (std::int64_t t : ti) out[a | t] = s;
    }
    return Element(algebra_, std::move(out));
  }
  const Eigen::MatrixXcd& m = x.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  for (std::int64_t a : ki) {
    for (std::int64_t b : ki) {
      std::complex<double> s = 0.0;
      for (std::int64_t t : ti) s += m(a | t, b | t);
      s *= inv;
      if (s == std::complex<double>(0.0)) continue;
      for (std::int64_t t : ti) out(a | t, b | t) = s;
    }
  }
  return Element::from_hermitian_part(algebra_, out);
}

FiltrationCheck verify_filtration(const Filtration& f, std::uint64_t seed, int trials) {
  FiltrationCheck c;
  c.trials = trials;
  Rng rng(seed);
  const AlgebraPtr& alg = f.algebra();
  const Element one = Element::identity(alg);
  const auto& levels = f.levels();
  for (const auto& lv : levels) c.unital_error = std::max(c.unital_error, (f.expect(one, lv) - one).max_abs_entry());
  c.positivity_min = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Element x = random_hermitian(rng, alg, 1.0);
    const Element y = random_psd(rng, alg, 0.0, 1.0);
    const auto& a = levels[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(levels.size()) - 1))];
    const auto& b = levels[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(levels.size()) - 1))];
    const Element ex = f.expect(x, a);
    c.trace_error = std::max(c.trace_error, std::abs(trace(ex) - trace(x)));
    c.positivity_min = std::min(c.positivity_min, min_eigenvalue(f.expect(y, b)));
    const FiltrationLevel lo{std::min(a.n, b.n), std::min(a.m, b.m)};
    c.tower_error = std::max(c.tower_error, (f.expect(ex, b) - f.expect(x, lo)).max_abs_entry());
  }
  c.passed = c.unital_error <= 1e-10 && c.trace_error <= 1e-10 && c.positivity_min >= -1e-10 && c.tower_error <= 1e-10;
  return c;
}

}  // namespace orlicz
