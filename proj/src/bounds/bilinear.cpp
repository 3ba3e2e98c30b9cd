#include "saddle/bounds/bilinear.hpp"

#include <cmath>

#include "saddle/errors.hpp"
#include "saddle/linalg/dense_eigen.hpp"

namespace saddle::bounds {

std::vector<double> BilinearExtremum::x_min() const {
  std::vector<double> x = x_star;
  for (auto& xi : x) xi = -xi;
  return x;
}

double bilinear_value(const linalg::RectMatrix& b, std::span<const double> x,
                      std::span<const double> y) {
  if (x.size() != b.rows()) throw DimensionError("bilinear_value: x has the wrong length");
  const auto by = b.multiply(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * by[i];
  return s;
}

BilinearExtremum bilinear_extremum(const linalg::RectMatrix& b,
                                   const linalg::LanczosOptions& lopts,
                                   const linalg::DenseOptions& dopts) {
  const double half_root2 = std::sqrt(0.5);
  BilinearExtremum out;
  out.x_star.assign(b.rows(), 0.0);
  out.y_star.assign(b.cols(), 0.0);
  if (b.nnz() == 0) {
    out.x_star[0] = half_root2;
    out.y_star[0] = half_root2;
    return out;
  }

  std::vector<double> v(b.cols());
  if (b.cols() <= dopts.cap) {
    const auto eig = linalg::symmetric_eigen(b.gram(), dopts.method, true);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eig.vectors(i, v.size() - 1);
  } else {
    v = linalg::extremal_eig(linalg::GramOperator(b), linalg::Which::largest, lopts).vector;
  }

  // sigma from ||B v|| rather than the Gram eigenvalue: same value, no sqrt of
  // a rounded square.
  std::vector<double> u = b.multiply(v);
  double sigma = 0.0;
  for (double ui : u) sigma += ui * ui;
  sigma = std::sqrt(sigma);
  for (auto& ui : u) ui /= sigma;

  out.sigma_max = sigma;
  out.max_value = 0.5 * sigma;
  for (std::size_t i = 0; i < u.size(); ++i) out.x_star[i] = half_root2 * u[i];
  for (std::size_t i = 0; i < v.size(); ++i) out.y_star[i] = half_root2 * v[i];
  return out;
}

}  // namespace saddle::bounds
