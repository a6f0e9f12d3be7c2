#include "orlicz/random.hpp"

#include <algorithm>
#include <functional>

#include "orlicz/errors.hpp"

namespace orlicz {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Eigen::MatrixXcd random_unitary(Rng& rng, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd z(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) z(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  return q;
}

AlgebraPtr random_algebra(Rng& rng, int d, int max_blocks) {
  if (d < 1) throw DomainError("dimension must be positive");
  const int choice = uniform_int(rng, 0, 2);
  if (choice == 0 || d == 1) return TracialAlgebra::full(d);
  if (choice == 1) return TracialAlgebra::diagonal(d);
  const int nb = uniform_int(rng, 1, std::min(d, std::max(1, max_blocks)));
  // cut [0, d) at nb - 1 distinct interior points
  std::vector<int> cuts;
  for (int i = 1; i < d; ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(nb - 1);
  cuts.push_back(0);
  cuts.push_back(d);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> blocks;
  for (std::size_t i = 1; i < cuts.size(); ++i) blocks.push_back(cuts[i] - cuts[i - 1]);
  return TracialAlgebra::block_diagonal(blocks);
}

namespace {

// sum over blocks of U_b diag(lambda) U_b^*
Element assemble(Rng& rng, const AlgebraPtr& a, const std::function<double(int)>& eig_value) {
  const int d = a->dim();
  if (a->commutative()) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v[i] = eig_value(i);
    return Element(a, v);
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const auto& bl = a->blocks();
  const auto& off = a->offsets();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    const Eigen::MatrixXcd u = random_unitary(rng, bl[b]);
    Eigen::VectorXd lam(bl[b]);
    for (int i = 0; i < bl[b]; ++i) lam[i] = eig_value(off[b] + i);
    m.block(off[b], off[b], bl[b], bl[b]) = u * lam.cast<std::complex<double>>().asDiagonal() * u.adjoint();
  }
  return Element::from_hermitian_part(a, m);
}

}  // namespace

Element random_hermitian(Rng& rng, const AlgebraPtr& algebra, double scale) {
  std::vector<double> lam(algebra->dim());
  for (double& v : lam) v = uniform(rng, -scale, scale);
  return assemble(rng, algebra, [&](int i) { return lam[i]; });
}

Element random_psd(Rng& rng, const AlgebraPtr& algebra, double lo, double hi) {
  if (lo < 0.0 || hi < lo) throw DomainError("PSD spectrum range must satisfy 0 <= lo <= hi");
  std::vector<double> lam(algebra->dim());
  for (double& v : lam) v = uniform(rng, lo, hi);
  return assemble(rng, algebra, [&](int i) { return lam[i]; });
}

Element random_projection(Rng& rng, const AlgebraPtr& algebra, double density) {
  std::vector<double> lam(algebra->dim());
  for (double& v : lam) v = uniform(rng, 0.0, 1.0) < density ? 1.0 : 0.0;
  return assemble(rng, algebra, [&](int i) { return lam[i]; });
}

std::vector<Element> random_disjoint_projections(Rng& rng, const AlgebraPtr& algebra, int count) {
  if (count < 1) throw DomainError("need at least one projection");
  const int d = algebra->dim();
  std::vector<int> label(d);
  for (int& l : label) l = uniform_int(rng, 0, count);  // `count` means unassigned
  std::vector<Eigen::MatrixXcd> us;
  const auto& bl = algebra->blocks();
  const auto& off = algebra->offsets();
  if (!algebra->commutative()) {
    for (int b : bl) us.push_back(random_unitary(rng, b));
  }
  std::vector<Element> out;
  for (int k = 0; k < count; ++k) {
    if (algebra->commutative()) {
      Eigen::VectorXd v(d);
      for (int i = 0; i < d; ++i) v[i] = label[i] == k ? 1.0 : 0.0;
      out.emplace_back(algebra, v);
      continue;
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t b = 0; b < bl.size(); ++b) {
      for (int i = 0; i < bl[b]; ++i) {
        if (label[off[b] + i] != k) continue;
        const auto col = us[b].col(i);
        m.block(off[b], off[b], bl[b], bl[b]) += col * col.adjoint();
      }
    }
    out.push_back(Element::from_hermitian_part(algebra, m));
  }
  return out;
}

StepFunction random_step_function(Rng& rng, int pieces, double max_value) {
  std::vector<double> cuts, vals;
  for (int i = 0; i < pieces - 1; ++i) cuts.push_back(uniform(rng, 0.0, 1.0));
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> br{0.0};
  br.insert(br.end(), cuts.begin(), cuts.end());
  br.push_back(uniform(rng, 0.5, 1.0) < 0.75 ? 1.0 : std::max(br.back(), uniform(rng, br.back(), 1.0)));
  for (int i = 0; i < pieces; ++i) vals.push_back(uniform(rng, 0.0, max_value));
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return StepFunction(std::move(br), std::move(vals));
}

}  // namespace orlicz
