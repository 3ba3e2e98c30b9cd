#pragma once

#include <vector>

#include "saddle/linalg/dense_matrix.hpp"

namespace saddle::linalg {

enum class DenseMethod {
  householder_ql,  // tridiagonal reduction followed by implicit QL sweeps
  jacobi,          // cyclic Jacobi rotations
};

/// Eigenvalues in ascending order; when requested, `vectors` holds the matching
/// orthonormal eigenvectors as columns.
struct DenseEigen {
  std::vector<double> values;
  DenseMatrix vectors;
};

/// Full eigendecomposition of a dense symmetric matrix. Only the lower
/// triangle is read. Throws DimensionError for a non-square input.
DenseEigen symmetric_eigen(const DenseMatrix& m, DenseMethod method = DenseMethod::householder_ql,
                           bool want_vectors = true);

}  // namespace saddle::linalg
