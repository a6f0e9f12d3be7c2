#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orlicz/algebra.hpp"
#include "orlicz/step_function.hpp"

namespace orlicz {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive

// Haar-like unitary from QR of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(Rng& rng, int d);

// Random algebra of dimension d: full, diagonal or block-diagonal with at most max_blocks blocks.
AlgebraPtr random_algebra(Rng& rng, int d, int max_blocks);

Element random_hermitian(Rng& rng, const AlgebraPtr& algebra, double scale = 1.0);
// Eigenvalues drawn uniformly from [lo, hi].
Element random_psd(Rng& rng, const AlgebraPtr& algebra, double lo, double hi);
// Each eigenvector kept with probability `density`.
Element random_projection(Rng& rng, const AlgebraPtr& algebra, double density = 0.5);
// `count` mutually orthogonal projections (some may be zero).
std::vector<Element> random_disjoint_projections(Rng& rng, const AlgebraPtr& algebra, int count);

StepFunction random_step_function(Rng& rng, int pieces, double max_value = 1.0);

}  // namespace orlicz
