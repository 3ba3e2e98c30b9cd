#include "saddle/linalg/operator.hpp"

#include <algorithm>
#include <cmath>

#include "saddle/errors.hpp"

namespace saddle::linalg {

GramOperator::GramOperator(const RectMatrix& b, const SymMatrix* c) : b_(&b), c_(c) {
  if (c_ && c_->order() != b.cols())
    throw DimensionError("Gram operator: C order differs from the column count of B");
}

void GramOperator::apply(std::span<const double> x, std::span<double> y) const {
  // Scratch buffers make a GramOperator single-threaded; build one per thread.
  tmp_.resize(b_->rows());
  b_->multiply_into(x, tmp_);
  b_->multiply_transpose_into(tmp_, y);
  if (c_) {
    ctmp_.resize(c_->order());
    c_->multiply_into(x, ctmp_);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= ctmp_[i];
  }
}

Interval GramOperator::spectral_enclosure() const {
  // sigma_max^2 <= ||B||_1 ||B||_inf; B^T B itself is positive semidefinite.
  std::vector<double> row_sum(b_->rows(), 0.0), col_sum(b_->cols(), 0.0);
  for (const auto& t : b_->entries()) {
    row_sum[t.row] += std::abs(t.value);
    col_sum[t.col] += std::abs(t.value);
  }
  const double norm_inf = *std::max_element(row_sum.begin(), row_sum.end());
  const double norm_1 = *std::max_element(col_sum.begin(), col_sum.end());
  Interval g{0.0, norm_1 * norm_inf};
  if (c_) {
    const Interval gc = c_->gershgorin();
    g.lo -= gc.hi;
    g.hi -= gc.lo;
  }
  return g;
}

}  // namespace saddle::linalg
