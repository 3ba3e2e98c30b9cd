#include "saddle/linalg/rect_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "saddle/errors.hpp"

namespace saddle::linalg {

namespace {

bool entry_less(const Triplet& a, const Triplet& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

RectMatrix RectMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                     std::span<const Triplet> entries) {
  if (rows == 0 || cols == 0) throw DimensionError("rectangular matrix with a zero dimension");
  RectMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_.reserve(entries.size());
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols)
      throw DimensionError("entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                           ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    if (!std::isfinite(t.value)) throw InvalidArgument("non-finite matrix entry");
    m.entries_.push_back(t);
  }
  std::stable_sort(m.entries_.begin(), m.entries_.end(), entry_less);
  auto& e = m.entries_;
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size();) {
    Triplet acc = e[i++];
    while (i < e.size() && e[i].row == acc.row && e[i].col == acc.col) acc.value += e[i++].value;
    if (acc.value != 0.0) e[out++] = acc;
  }
  e.resize(out);
  return m;
}

RectMatrix RectMatrix::from_dense(const DenseMatrix& d, double drop_below) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (std::abs(d(i, j)) > drop_below) t.push_back({i, j, d(i, j)});
  return from_triplets(d.rows(), d.cols(), t);
}

RectMatrix RectMatrix::zero(std::size_t rows, std::size_t cols) {
  return from_triplets(rows, cols, {});
}

void RectMatrix::multiply_into(std::span<const double> x, std::span<double> y) const {
  if (x.size() != cols_ || y.size() != rows_)
    throw DimensionError("rectangular matvec: vector length " + std::to_string(x.size()) +
                         " != column count " + std::to_string(cols_));
  std::fill(y.begin(), y.end(), 0.0);
  for (const auto& t : entries_) y[t.row] += t.value * x[t.col];
}

void RectMatrix::multiply_transpose_into(std::span<const double> x, std::span<double> y) const {
  if (x.size() != rows_ || y.size() != cols_)
    throw DimensionError("transposed matvec: vector length " + std::to_string(x.size()) +
                         " != row count " + std::to_string(rows_));
  std::fill(y.begin(), y.end(), 0.0);
  for (const auto& t : entries_) y[t.col] += t.value * x[t.row];
}

std::vector<double> RectMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_);
  multiply_into(x, y);
  return y;
}

std::vector<double> RectMatrix::multiply_transpose(std::span<const double> x) const {
  std::vector<double> y(cols_);
  multiply_transpose_into(x, y);
  return y;
}

RectMatrix RectMatrix::transposed() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_triplets(cols_, rows_, t);
}

double RectMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& t : entries_) s += t.value * t.value;
  return std::sqrt(s);
}

DenseMatrix RectMatrix::to_dense() const {
  DenseMatrix d(rows_, cols_);
  for (const auto& t : entries_) d(t.row, t.col) = t.value;
  return d;
}

DenseMatrix RectMatrix::gram() const {
  // Entries are row-sorted, so each row's nonzeros are contiguous.
  DenseMatrix g(cols_, cols_);
  for (std::size_t begin = 0; begin < entries_.size();) {
    std::size_t end = begin;
    while (end < entries_.size() && entries_[end].row == entries_[begin].row) ++end;
    for (std::size_t a = begin; a < end; ++a)
      for (std::size_t b = begin; b < end; ++b)
        g(entries_[a].col, entries_[b].col) += entries_[a].value * entries_[b].value;
    begin = end;
  }
  return g;
}

}  // namespace saddle::linalg
