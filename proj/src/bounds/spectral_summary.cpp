#include "saddle/bounds/spectral_summary.hpp"

#include <algorithm>
#include <cmath>

namespace saddle::bounds {

SpectralSummary summarize(double lambda_max, double lambda_min, double lambda_min_a,
                          double lambda_min_c, bool c_absent, double tie_tol) {
  SpectralSummary s;
  s.lambda_max = lambda_max;
  s.lambda_min = lambda_min;
  s.rho = std::max(std::abs(lambda_max), std::abs(lambda_min));
  s.s = lambda_max + lambda_min;
  const double tie = tie_tol * s.rho;
  s.quasi_pf = s.s >= -tie;
  s.quasi_pf_strict = s.s > tie;
  s.boundary = std::abs(s.s) <= tie;
  s.lambda_min_a = lambda_min_a;
  s.lambda_min_c = c_absent ? 0.0 : lambda_min_c;
  s.c_absent = c_absent;
  s.condition_value = s.lambda_min_a + s.lambda_min_c;
  s.condition_holds = s.condition_value >= -tie;
  return s;
}

namespace {

// Blocks below this order go to the dense oracle: exact to round-off and
// cheaper than a Krylov run.
constexpr std::size_t dense_below = 200;

}  // namespace

double block_min(const linalg::SymMatrix& m, const SpectralOptions& opts) {
  if (m.order() <= dense_below) return linalg::dense_full_spectrum(m, opts.dense).front();
  return linalg::extremal_eig(m, linalg::Which::smallest, opts.lanczos).value;
}

double block_max(const linalg::SymMatrix& m, const SpectralOptions& opts) {
  if (m.order() <= dense_below) return linalg::dense_full_spectrum(m, opts.dense).back();
  return linalg::extremal_eig(m, linalg::Which::largest, opts.lanczos).value;
}

SpectralSummary analyze(const SaddleSystem& sys, const SpectralOptions& opts) {
  const auto w = model::assemble_w(sys);
  const double lmax = linalg::extremal_eig(w, linalg::Which::largest, opts.lanczos).value;
  const double lmin = linalg::extremal_eig(w, linalg::Which::smallest, opts.lanczos).value;
  const double amin = block_min(sys.a(), opts);
  const double cmin = sys.c() ? block_min(*sys.c(), opts) : 0.0;
  return summarize(lmax, lmin, amin, cmin, !sys.has_c(), opts.tie_tol);
}

SumBoundCheck sum_lower_bound_check(const SpectralSummary& summary, double tol) {
  SumBoundCheck c;
  c.lhs = summary.s;
  c.rhs = summary.condition_value;
  c.holds = c.lhs >= c.rhs - tol * summary.rho;
  return c;
}

SumBoundCheck sum_lower_bound_check(const SaddleSystem& sys, const SpectralOptions& opts,
                                    double tol) {
  return sum_lower_bound_check(analyze(sys, opts), tol);
}

}  // namespace saddle::bounds
