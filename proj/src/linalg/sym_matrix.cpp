#include "saddle/linalg/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "saddle/errors.hpp"

namespace saddle::linalg {

namespace {

bool entry_less(const Triplet& a, const Triplet& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

// Sum duplicates in place and drop exact zeros. Input must be sorted.
void merge_sorted(std::vector<Triplet>& e) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size();) {
    Triplet acc = e[i++];
    while (i < e.size() && e[i].row == acc.row && e[i].col == acc.col) acc.value += e[i++].value;
    if (acc.value != 0.0) e[out++] = acc;
  }
  e.resize(out);
}

}  // namespace

SymMatrix SymMatrix::from_triplets(std::size_t order, std::span<const Triplet> entries) {
  if (order == 0) throw DimensionError("symmetric matrix of order 0");
  SymMatrix m;
  m.order_ = order;
  m.entries_.reserve(entries.size());
  for (const auto& t : entries) {
    if (t.row >= order || t.col >= order)
      throw DimensionError("entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                           ") outside order " + std::to_string(order));
    if (!std::isfinite(t.value)) throw InvalidArgument("non-finite matrix entry");
    m.entries_.push_back(t.row <= t.col ? t : Triplet{t.col, t.row, t.value});
  }
  std::stable_sort(m.entries_.begin(), m.entries_.end(), entry_less);
  merge_sorted(m.entries_);
  return m;
}

SymMatrix SymMatrix::from_dense(const DenseMatrix& d, double drop_below) {
  if (d.rows() != d.cols()) throw DimensionError("from_dense: matrix is not square");
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = i; j < d.cols(); ++j)
      if (std::abs(d(i, j)) > drop_below) t.push_back({i, j, d(i, j)});
  return from_triplets(d.rows(), t);
}

SymMatrix SymMatrix::identity(std::size_t order, double diag) {
  std::vector<Triplet> t;
  t.reserve(order);
  for (std::size_t i = 0; i < order; ++i) t.push_back({i, i, diag});
  return from_triplets(order, t);
}

void SymMatrix::multiply_into(std::span<const double> x, std::span<double> y) const {
  if (x.size() != order_ || y.size() != order_)
    throw DimensionError("symmetric matvec: vector length " + std::to_string(x.size()) +
                         " != order " + std::to_string(order_));
  std::fill(y.begin(), y.end(), 0.0);
  for (const auto& t : entries_) {
    y[t.row] += t.value * x[t.col];
    if (t.row != t.col) y[t.col] += t.value * x[t.row];
  }
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(order_);
  multiply_into(x, y);
  return y;
}

double SymMatrix::trace() const noexcept {
  double s = 0.0;
  for (const auto& t : entries_)
    if (t.row == t.col) s += t.value;
  return s;
}

double SymMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& t : entries_) s += (t.row == t.col ? 1.0 : 2.0) * t.value * t.value;
  return std::sqrt(s);
}

double SymMatrix::max_abs_diagonal() const noexcept {
  double m = 0.0;
  for (const auto& t : entries_)
    if (t.row == t.col) m = std::max(m, std::abs(t.value));
  return m;
}

double SymMatrix::diagonal(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Triplet{i, i, 0.0}, entry_less);
  return (it != entries_.end() && it->row == i && it->col == i) ? it->value : 0.0;
}

Interval SymMatrix::gershgorin() const {
  std::vector<double> center(order_, 0.0), radius(order_, 0.0);
  for (const auto& t : entries_) {
    if (t.row == t.col) {
      center[t.row] = t.value;
    } else {
      radius[t.row] += std::abs(t.value);
      radius[t.col] += std::abs(t.value);
    }
  }
  Interval g{center[0] - radius[0], center[0] + radius[0]};
  for (std::size_t i = 1; i < order_; ++i) {
    g.lo = std::min(g.lo, center[i] - radius[i]);
    g.hi = std::max(g.hi, center[i] + radius[i]);
  }
  return g;
}

SymMatrix SymMatrix::scaled(double factor) const {
  if (factor == 0.0) {
    SymMatrix z;
    z.order_ = order_;
    return z;
  }
  SymMatrix s = *this;
  for (auto& t : s.entries_) t.value *= factor;
  return s;
}

DenseMatrix SymMatrix::to_dense() const {
  DenseMatrix d(order_, order_);
  for (const auto& t : entries_) {
    d(t.row, t.col) = t.value;
    d(t.col, t.row) = t.value;
  }
  return d;
}

}  // namespace saddle::linalg
