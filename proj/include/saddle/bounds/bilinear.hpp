#pragma once

#include <span>
#include <vector>

#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/spectrum.hpp"

namespace saddle::bounds {

/// Maximum of <x, B y> over ||x||^2 + ||y||^2 = 1 and a maximizer.
struct BilinearExtremum {
  double max_value = 0.0;  // sigma_max(B) / 2
  double sigma_max = 0.0;
  std::vector<double> x_star;  // sqrt(2)/2 * u
  std::vector<double> y_star;  // sqrt(2)/2 * v

  /// The minimizer: negating x_star gives <x, B y> = -max_value.
  std::vector<double> x_min() const;
};

/// (u, v) is the top singular pair: v from the Gram eigenvector, u = B v / sigma.
/// For B = 0 the maximum is 0 and (x, y) = (e1, e1) * sqrt(2)/2.
BilinearExtremum bilinear_extremum(const linalg::RectMatrix& b,
                                   const linalg::LanczosOptions& lopts = {},
                                   const linalg::DenseOptions& dopts = {});

double bilinear_value(const linalg::RectMatrix& b, std::span<const double> x,
                      std::span<const double> y);

}  // namespace saddle::bounds
