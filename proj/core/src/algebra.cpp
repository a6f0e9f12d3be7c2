#include "orlicz/algebra.hpp"

#include <cmath>
#include <numeric>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr double kHermitianTol = 1e-12;

}  // namespace

void TracialAlgebra::finish() {
  offsets_.assign(blocks_.size(), 0);
  int acc = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    offsets_[b] = acc;
    acc += blocks_[b];
  }
  if (acc != dim_) throw DomainError("block sizes must sum to the dimension");
  double s = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw DomainError("trace weights must be strictly positive");
    s += w;
  }
  if (std::abs(s - 1.0) > 1e-12) throw DomainError("trace weights must sum to 1");
}

AlgebraPtr TracialAlgebra::full(int d) {
  if (d < 1) throw DomainError("dimension must be positive");
  auto a = std::shared_ptr<TracialAlgebra>(new TracialAlgebra());
  a->dim_ = d;
  a->structure_ = Structure::full;
  a->weights_.assign(d, 1.0 / d);
  a->blocks_ = {d};
  a->finish();
  return a;
}

AlgebraPtr TracialAlgebra::diagonal(int d) {
  if (d < 1) throw DomainError("dimension must be positive");
  return diagonal(std::vector<double>(d, 1.0 / d));
}

AlgebraPtr TracialAlgebra::diagonal(std::vector<double> weights) {
  if (weights.empty()) throw DomainError("dimension must be positive");
  auto a = std::shared_ptr<TracialAlgebra>(new TracialAlgebra());
  a->dim_ = static_cast<int>(weights.size());
  a->structure_ = Structure::diagonal;
  a->weights_ = std::move(weights);
  a->blocks_.assign(a->dim_, 1);
  a->finish();
  return a;
}

AlgebraPtr TracialAlgebra::block_diagonal(std::vector<int> blocks, std::vector<double> block_masses) {
  if (blocks.empty()) throw DomainError("need at least one block");
  for (int b : blocks) {
    if (b < 1) throw DomainError("block sizes must be positive");
  }
  const int d = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (block_masses.empty()) {
    for (int b : blocks) block_masses.push_back(static_cast<double>(b) / d);
  }
  if (block_masses.size() != blocks.size()) throw DomainError("one mass per block required");
  auto a = std::shared_ptr<TracialAlgebra>(new TracialAlgebra());
  a->dim_ = d;
  a->structure_ = Structure::block_diagonal;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int i = 0; i < blocks[b]; ++i) a->weights_.push_back(block_masses[b] / blocks[b]);
  }
  a->blocks_ = std::move(blocks);
  a->finish();
  return a;
}

bool TracialAlgebra::same_as(const TracialAlgebra& other) const {
  return this == &other ||
         (dim_ == other.dim_ && structure_ == other.structure_ && blocks_ == other.blocks_ && weights_ == other.weights_);
}

Element::Element(AlgebraPtr algebra, Eigen::VectorXd diagonal)
    : algebra_(std::move(algebra)), diagonal_storage_(true), diag_(std::move(diagonal)) {
  if (!algebra_) throw DomainError("element needs an algebra");
  if (!algebra_->commutative()) throw DomainError("vector storage needs a commutative algebra");
  if (diag_.size() != algebra_->dim()) throw DomainError("element size does not match the algebra");
}

Element::Element(AlgebraPtr algebra, Eigen::MatrixXcd matrix) : algebra_(std::move(algebra)) {
  if (!algebra_) throw DomainError("element needs an algebra");
  const int d = algebra_->dim();
  if (matrix.rows() != d || matrix.cols() != d) throw DomainError("element shape does not match the algebra");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol * scale) {
    throw DomainError("element is not Hermitian");
  }
  const auto& bl = algebra_->blocks();
  const auto& off = algebra_->offsets();
  for (std::size_t a = 0; a < bl.size(); ++a) {
    for (std::size_t b = 0; b < bl.size(); ++b) {
      if (a == b) continue;
      if (matrix.block(off[a], off[b], bl[a], bl[b]).cwiseAbs().maxCoeff() > kHermitianTol * scale) {
        throw DomainError("element does not respect the block structure");
      }
    }
  }
  *this = from_hermitian_part(algebra_, matrix);
}

Element Element::from_hermitian_part(AlgebraPtr algebra, const Eigen::MatrixXcd& m) {
  Element e;
  e.algebra_ = std::move(algebra);
  const auto& bl = e.algebra_->blocks();
  const auto& off = e.algebra_->offsets();
  if (e.algebra_->commutative()) {
    e.diagonal_storage_ = true;
    e.diag_ = m.diagonal().real();
    return e;
  }
  const int d = e.algebra_->dim();
  e.mat_ = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t b = 0; b < bl.size(); ++b) {
    const auto blk = m.block(off[b], off[b], bl[b], bl[b]);
    e.mat_.block(off[b], off[b], bl[b], bl[b]) = 0.5 * (blk + blk.adjoint());
  }
  return e;
}

Element Element::zero(AlgebraPtr algebra) {
  const int d = algebra->dim();
  if (algebra->commutative()) return Element(std::move(algebra), Eigen::VectorXd(Eigen::VectorXd::Zero(d)));
  return Element(std::move(algebra), Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(d, d)));
}

Element Element::identity(AlgebraPtr algebra) {
  const int d = algebra->dim();
  if (algebra->commutative()) return Element(std::move(algebra), Eigen::VectorXd(Eigen::VectorXd::Ones(d)));
  return Element(std::move(algebra), Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(d, d)));
}

Eigen::MatrixXcd Element::dense() const {
  if (diagonal_storage_) return diag_.cast<std::complex<double>>().asDiagonal();
  return mat_;
}

Eigen::VectorXd Element::diagonal_entries() const {
  if (diagonal_storage_) return diag_;
  return mat_.diagonal().real();
}

double Element::max_abs_entry() const {
  if (diagonal_storage_) return diag_.size() ? diag_.cwiseAbs().maxCoeff() : 0.0;
  return mat_.size() ? mat_.cwiseAbs().maxCoeff() : 0.0;
}

void require_same_algebra(const Element& a, const Element& b) {
  if (!a.algebra() || !b.algebra() || !a.algebra()->same_as(*b.algebra())) {
    throw DomainError("elements live in different algebras");
  }
}

Element Element::operator+(const Element& other) const {
  require_same_algebra(*this, other);
  Element r = *this;
  if (diagonal_storage_) {
    r.diag_ += other.diag_;
  } else {
    r.mat_ += other.mat_;
  }
  return r;
}

Element Element::operator-(const Element& other) const {
  require_same_algebra(*this, other);
  Element r = *this;
  if (diagonal_storage_) {
    r.diag_ -= other.diag_;
  } else {
    r.mat_ -= other.mat_;
  }
  return r;
}

Element Element::operator*(double s) const {
  Element r = *this;
  if (diagonal_storage_) {
    r.diag_ *= s;
  } else {
    r.mat_ *= s;
  }
  return r;
}

Element sandwich(const Element& a, const Element& x) {
  require_same_algebra(a, x);
  if (a.is_diagonal()) {
    return Element(a.algebra(), Eigen::VectorXd(a.diagonal().array() * x.diagonal().array() * a.diagonal().array()));
  }
  return Element::from_hermitian_part(a.algebra(), a.matrix() * x.matrix() * a.matrix());
}

Element commuting_product(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.is_diagonal()) return Element(a.algebra(), Eigen::VectorXd(a.diagonal().array() * b.diagonal().array()));
  return Element::from_hermitian_part(a.algebra(), a.matrix() * b.matrix());
}

}  // namespace orlicz
