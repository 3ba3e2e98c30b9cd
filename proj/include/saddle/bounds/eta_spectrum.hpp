#pragma once

#include <cstddef>
#include <vector>

#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/spectrum.hpp"

namespace saddle::bounds {

struct EtaPair {
  double sigma = 0.0;
  double plus = 0.0;   // (eta + sqrt(4 sigma^2 + eta^2)) / 2
  double minus = 0.0;  // (eta - sqrt(4 sigma^2 + eta^2)) / 2
};

/// Closed-form spectrum of [eta I B; B^T 0].
struct EtaSpectrum {
  double eta = 0.0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t rank_defect = 0;  // r = n - rank(B)
  std::size_t zero_mult = 0;    // r
  std::size_t eta_mult = 0;     // m - n + r
  std::vector<EtaPair> pairs;   // one per nonzero singular value

  /// The eta multiplicity as it appears in the classical statement, m - n - r.
  /// It does not add up to m + n whenever r > 0; kept for reporting.
  long printed_eta_mult() const noexcept {
    return static_cast<long>(m) - static_cast<long>(n) - static_cast<long>(rank_defect);
  }

  /// All m + n eigenvalues, ascending.
  std::vector<double> eigenvalues() const;
};

/// Throws InvalidArgument for eta <= 0. Rank uses the 1e-10 * sigma_max threshold.
EtaSpectrum explicit_spectrum_eta(double eta, const linalg::RectMatrix& b,
                                  const linalg::DenseOptions& opts = {});

}  // namespace saddle::bounds
