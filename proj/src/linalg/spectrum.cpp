#include "saddle/linalg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace saddle::linalg {

std::vector<double> matvec(const SymMatrix& m, std::span<const double> x) { return m.multiply(x); }

std::vector<double> matvec(const RectMatrix& m, std::span<const double> x) { return m.multiply(x); }

std::vector<double> dense_full_spectrum(const SymMatrix& m, const DenseOptions& opts) {
  if (m.order() > opts.cap)
    throw CapacityError("dense spectrum requested for order " + std::to_string(m.order()) +
                        " above the cap of " + std::to_string(opts.cap) +
                        "; use extremal_eig for large matrices");
  return symmetric_eigen(m.to_dense(), opts.method, false).values;
}

namespace {

// Gram eigenvalues within round-off of zero carry sqrt(eps)-sized noise after
// the square root; clamp them so rank decisions see exact zeros.
std::vector<double> sqrt_clamped(std::vector<double> gram_values) {
  const double top = gram_values.empty() ? 0.0 : std::max(gram_values.back(), 0.0);
  const double floor = 100.0 * static_cast<double>(gram_values.size()) *
                       std::numeric_limits<double>::epsilon() * top;
  std::vector<double> s(gram_values.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double g = gram_values[gram_values.size() - 1 - i];
    s[i] = g <= floor ? 0.0 : std::sqrt(g);
  }
  return s;
}

}  // namespace

std::vector<double> singular_values(const RectMatrix& b, const DenseOptions& opts) {
  if (b.cols() > opts.cap)
    throw CapacityError("singular values requested for " + std::to_string(b.cols()) +
                        " columns above the cap of " + std::to_string(opts.cap) +
                        "; use largest_singular_value / smallest_singular_value");
  return sqrt_clamped(symmetric_eigen(b.gram(), opts.method, false).values);
}

double largest_singular_value(const RectMatrix& b, const LanczosOptions& lopts,
                              const DenseOptions& dopts) {
  if (b.cols() <= dopts.cap) return singular_values(b, dopts).front();
  const EigPair top = extremal_eig(GramOperator(b), Which::largest, lopts);
  return std::sqrt(std::max(top.value, 0.0));
}

double smallest_singular_value(const RectMatrix& b, const LanczosOptions& lopts,
                               const DenseOptions& dopts) {
  if (b.rows() < b.cols()) return 0.0;
  if (b.cols() <= dopts.cap) return singular_values(b, dopts).back();
  const EigPair bottom = extremal_eig(GramOperator(b), Which::smallest, lopts);
  return std::sqrt(std::max(bottom.value, 0.0));
}

std::size_t rank_defect(std::span<const double> singular_desc, double threshold) {
  if (singular_desc.empty()) return 0;
  const double top = *std::max_element(singular_desc.begin(), singular_desc.end());
  return static_cast<std::size_t>(std::count_if(singular_desc.begin(), singular_desc.end(),
                                                [&](double s) { return s <= threshold * top; }));
}

}  // namespace saddle::linalg
