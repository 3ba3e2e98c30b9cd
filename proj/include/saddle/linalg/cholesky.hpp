#pragma once

#include <cstddef>

#include "saddle/linalg/sym_matrix.hpp"

namespace saddle::linalg {

struct CholeskyOutcome {
  bool success = false;
  std::size_t failed_index = 0;  // row of the first nonpositive pivot
  double pivot = 0.0;            // value of that pivot (before the square root)
  double min_pivot = 0.0;        // smallest pivot seen
};

/// Attempts an envelope (skyline) Cholesky factorization of M + shift*I and
/// reports the first nonpositive pivot. Cost is governed by the profile of M,
/// which is small for banded FEM orderings.
CholeskyOutcome try_cholesky(const SymMatrix& m, double shift = 0.0);

}  // namespace saddle::linalg
