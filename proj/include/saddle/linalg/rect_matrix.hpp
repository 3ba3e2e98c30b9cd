#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "saddle/linalg/dense_matrix.hpp"
#include "saddle/linalg/sym_matrix.hpp"

namespace saddle::linalg {

/// General sparse rectangular matrix, entries sorted by (row, col) and merged.
class RectMatrix {
 public:
  RectMatrix() = default;

  static RectMatrix from_triplets(std::size_t rows, std::size_t cols,
                                  std::span<const Triplet> entries);
  static RectMatrix from_dense(const DenseMatrix& m, double drop_below = 0.0);
  static RectMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const Triplet> entries() const noexcept { return entries_; }

  /// y = B x, x of length cols().
  std::vector<double> multiply(std::span<const double> x) const;
  /// y = B^T x, x of length rows().
  std::vector<double> multiply_transpose(std::span<const double> x) const;
  void multiply_into(std::span<const double> x, std::span<double> y) const;
  void multiply_transpose_into(std::span<const double> x, std::span<double> y) const;

  RectMatrix transposed() const;
  double frobenius_norm() const noexcept;
  DenseMatrix to_dense() const;
  /// Dense B^T B (cols x cols).
  DenseMatrix gram() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> entries_;
};

}  // namespace saddle::linalg
