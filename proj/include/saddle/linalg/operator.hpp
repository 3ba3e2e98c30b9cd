#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/sym_matrix.hpp"

namespace saddle::linalg {

/// Matrix-free symmetric linear map, the input of the Krylov solver.
class SymmetricOperator {
 public:
  virtual ~SymmetricOperator() = default;

  virtual std::size_t order() const = 0;
  /// y = Op x; y has length order() and is overwritten.
  virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
  /// An interval known to contain the whole spectrum.
  virtual Interval spectral_enclosure() const = 0;
};

/// Borrows a SymMatrix; the matrix must outlive the operator.
class SymMatrixOperator final : public SymmetricOperator {
 public:
  explicit SymMatrixOperator(const SymMatrix& m) : m_(&m) {}

  std::size_t order() const override { return m_->order(); }
  void apply(std::span<const double> x, std::span<double> y) const override {
    m_->multiply_into(x, y);
  }
  Interval spectral_enclosure() const override { return m_->gershgorin(); }

 private:
  const SymMatrix* m_;
};

/// x -> B^T B x - C x without forming the product. C is optional (absent = 0).
class GramOperator final : public SymmetricOperator {
 public:
  explicit GramOperator(const RectMatrix& b, const SymMatrix* c = nullptr);

  std::size_t order() const override { return b_->cols(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  Interval spectral_enclosure() const override;

 private:
  const RectMatrix* b_;
  const SymMatrix* c_;
  mutable std::vector<double> tmp_;
  mutable std::vector<double> ctmp_;
};

}  // namespace saddle::linalg
