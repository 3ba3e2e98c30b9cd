#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "saddle/linalg/dense_matrix.hpp"
#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/sym_matrix.hpp"
#include "saddle/model/saddle_system.hpp"

namespace test {

using saddle::linalg::DenseMatrix;
using saddle::linalg::RectMatrix;
using saddle::linalg::SymMatrix;

inline DenseMatrix dense(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  DenseMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline SymMatrix sym(std::initializer_list<std::initializer_list<double>> rows) {
  return SymMatrix::from_dense(dense(rows));
}

inline SymMatrix diag(std::initializer_list<double> values) {
  std::vector<saddle::linalg::Triplet> t;
  std::size_t i = 0;
  for (double v : values) {
    t.push_back({i, i, v});
    ++i;
  }
  return SymMatrix::from_triplets(values.size(), t);
}

inline RectMatrix rect(std::initializer_list<std::initializer_list<double>> rows) {
  return RectMatrix::from_dense(dense(rows));
}

inline saddle::model::SaddleSystem system(SymMatrix a, RectMatrix b,
                                          std::optional<SymMatrix> c = std::nullopt) {
  return saddle::model::SaddleSystem::create(std::move(a), std::move(b), std::move(c));
}

}  // namespace test
