#include "saddle/linalg/cholesky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace saddle::linalg {

CholeskyOutcome try_cholesky(const SymMatrix& m, double shift) {
  const std::size_t n = m.order();

  // Row i of the lower factor spans columns [first[i], i].
  std::vector<std::size_t> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = i;
  for (const auto& t : m.entries()) first[t.col] = std::min(first[t.col], t.row);

  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + (i - first[i] + 1);
  std::vector<double> l(offset[n], 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return l[offset[i] + (j - first[i])]; };

  for (const auto& t : m.entries()) at(t.col, t.row) = t.value;
  for (std::size_t i = 0; i < n; ++i) at(i, i) += shift;

  CholeskyOutcome out;
  out.min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = first[i]; j <= i; ++j) {
      double s = at(i, j);
      const std::size_t k0 = std::max(first[i], first[j]);
      for (std::size_t k = k0; k < j; ++k) s -= at(i, k) * at(j, k);
      if (j < i) {
        at(i, j) = s / at(j, j);
      } else {
        out.min_pivot = std::min(out.min_pivot, s);
        if (!(s > 0.0)) {
          out.failed_index = i;
          out.pivot = s;
          return out;
        }
        at(i, i) = std::sqrt(s);
      }
    }
  }
  out.success = true;
  return out;
}

}  // namespace saddle::linalg
