#include "saddle/bounds/eta_spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "saddle/errors.hpp"

namespace saddle::bounds {

std::vector<double> EtaSpectrum::eigenvalues() const {
  std::vector<double> out;
  out.reserve(m + n);
  out.insert(out.end(), zero_mult, 0.0);
  out.insert(out.end(), eta_mult, eta);
  for (const auto& p : pairs) {
    out.push_back(p.plus);
    out.push_back(p.minus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EtaSpectrum explicit_spectrum_eta(double eta, const linalg::RectMatrix& b,
                                  const linalg::DenseOptions& opts) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidArgument("eta must be positive");
  const auto sigma = linalg::singular_values(b, opts);

  EtaSpectrum s;
  s.eta = eta;
  s.m = b.rows();
  s.n = b.cols();
  s.rank_defect = linalg::rank_defect(sigma);
  s.zero_mult = s.rank_defect;
  // rank(B) <= m, so m - n + r is never negative.
  s.eta_mult = s.m + s.rank_defect - s.n;
  for (std::size_t k = 0; k < s.n - s.rank_defect; ++k) {
    const double root = std::sqrt(4.0 * sigma[k] * sigma[k] + eta * eta);
    // The minus root in cancellation-free form.
    s.pairs.push_back({sigma[k], 0.5 * (eta + root), -2.0 * sigma[k] * sigma[k] / (eta + root)});
  }
  return s;
}

}  // namespace saddle::bounds
