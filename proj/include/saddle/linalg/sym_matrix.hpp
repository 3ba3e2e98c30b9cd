#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "saddle/linalg/dense_matrix.hpp"

namespace saddle::linalg {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Closed real interval.
struct Interval {
  double lo;
  double hi;

  bool contains(double x, double slack = 0.0) const noexcept {
    return x >= lo - slack && x <= hi + slack;
  }
};

/// Sparse symmetric matrix holding only the upper triangle (row <= col).
///
/// Entries are kept sorted by (row, col), duplicates are summed and exact zeros
/// dropped. Every product walks the stored entries in that order, so results
/// are bit-identical from call to call.
class SymMatrix {
 public:
  SymMatrix() = default;

  /// Entries may be given in either triangle; (i, j) with i > j is folded onto
  /// (j, i). Throws DimensionError for out-of-range indices or order 0.
  static SymMatrix from_triplets(std::size_t order, std::span<const Triplet> entries);
  static SymMatrix from_dense(const DenseMatrix& m, double drop_below = 0.0);
  static SymMatrix identity(std::size_t order, double diag = 1.0);

  std::size_t order() const noexcept { return order_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const Triplet> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// y = M x. Throws DimensionError on length mismatch.
  std::vector<double> multiply(std::span<const double> x) const;
  /// y = M x without allocation; y is overwritten.
  void multiply_into(std::span<const double> x, std::span<double> y) const;

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  double max_abs_diagonal() const noexcept;
  double diagonal(std::size_t i) const;
  Interval gershgorin() const;

  SymMatrix scaled(double factor) const;
  DenseMatrix to_dense() const;

 private:
  std::size_t order_ = 0;
  std::vector<Triplet> entries_;
};

}  // namespace saddle::linalg
