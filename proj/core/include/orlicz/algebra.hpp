#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

namespace orlicz {

class TracialAlgebra;
using AlgebraPtr = std::shared_ptr<const TracialAlgebra>;

// Finite-dimensional algebra with a normalized trace tau(x) = sum_i w_i x_ii.
class TracialAlgebra {
 public:
  enum class Structure { full, diagonal, block_diagonal };

  static AlgebraPtr full(int d);
  static AlgebraPtr diagonal(int d);
  static AlgebraPtr diagonal(std::vector<double> weights);
  // block_masses: trace of each block's unit, default proportional to block size
  static AlgebraPtr block_diagonal(std::vector<int> blocks, std::vector<double> block_masses = {});

  int dim() const { return dim_; }
  Structure structure() const { return structure_; }
  bool commutative() const { return structure_ == Structure::diagonal; }
  const std::vector<double>& weights() const { return weights_; }
  // Block sizes; a full algebra is one block, a diagonal one has d blocks of size 1.
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<int>& offsets() const { return offsets_; }
  bool same_as(const TracialAlgebra& other) const;

 private:
  TracialAlgebra() = default;
  void finish();

  int dim_ = 0;
  Structure structure_ = Structure::full;
  std::vector<double> weights_;
  std::vector<int> blocks_;
  std::vector<int> offsets_;
};

// Hermitian element; stored as a real vector for commutative algebras, a dense matrix otherwise.
class Element {
 public:
  Element() = default;
  Element(AlgebraPtr algebra, Eigen::VectorXd diagonal);
  Element(AlgebraPtr algebra, Eigen::MatrixXcd matrix);

  static Element zero(AlgebraPtr algebra);
  static Element identity(AlgebraPtr algebra);
  // Symmetrizes and zeroes off-block entries without validation; for results of exact algebra.
  static Element from_hermitian_part(AlgebraPtr algebra, const Eigen::MatrixXcd& m);

  const AlgebraPtr& algebra() const { return algebra_; }
  int dim() const { return algebra_->dim(); }
  bool is_diagonal() const { return diagonal_storage_; }
  const Eigen::VectorXd& diagonal() const { return diag_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Eigen::MatrixXcd dense() const;
  Eigen::VectorXd diagonal_entries() const;

  double max_abs_entry() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(double s) const;

 private:
  AlgebraPtr algebra_;
  bool diagonal_storage_ = false;
  Eigen::VectorXd diag_;
  Eigen::MatrixXcd mat_;
};

inline Element operator*(double s, const Element& x) { return x * s; }

// a x a for Hermitian a, x
Element sandwich(const Element& a, const Element& x);
// Product of commuting Hermitian elements (projections, functions of one operator).
Element commuting_product(const Element& a, const Element& b);

void require_same_algebra(const Element& a, const Element& b);

}  // namespace orlicz
