#pragma once

#include "saddle/linalg/spectrum.hpp"
#include "saddle/model/saddle_system.hpp"

namespace saddle::bounds {

using model::SaddleSystem;

struct SpectralOptions {
  linalg::LanczosOptions lanczos;
  linalg::DenseOptions dense;
  double tie_tol = 1e-9;  // S within tie_tol * rho of zero is a boundary case
};

struct SpectralSummary {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double rho = 0.0;
  double s = 0.0;                 // lambda_max + lambda_min
  bool quasi_pf = false;          // S >= -tie_tol * rho
  bool quasi_pf_strict = false;   // S > tie_tol * rho
  bool boundary = false;          // |S| <= tie_tol * rho
  double lambda_min_a = 0.0;
  double lambda_min_c = 0.0;      // 0 when C is absent
  bool c_absent = false;
  double condition_value = 0.0;   // lambda_min(A) + lambda_min(C)
  bool condition_holds = false;   // condition_value >= -tie_tol * rho
};

/// Fills the derived fields from the four extreme eigenvalues.
SpectralSummary summarize(double lambda_max, double lambda_min, double lambda_min_a,
                          double lambda_min_c, bool c_absent, double tie_tol = 1e-9);

/// Extreme eigenvalues of W, A and C by the Krylov solver, then summarize().
/// ConvergenceError propagates.
SpectralSummary analyze(const SaddleSystem& sys, const SpectralOptions& opts = {});

/// Extreme eigenvalues of a symmetric block: dense oracle up to order 200,
/// Krylov solver above.
double block_min(const linalg::SymMatrix& m, const SpectralOptions& opts);
double block_max(const linalg::SymMatrix& m, const SpectralOptions& opts);

struct SumBoundCheck {
  double lhs = 0.0;  // lambda_max(W) + lambda_min(W)
  double rhs = 0.0;  // lambda_min(A) + lambda_min(C)
  bool holds = false;
};

/// lhs >= rhs - tol * rho.
SumBoundCheck sum_lower_bound_check(const SpectralSummary& summary, double tol = 1e-9);
SumBoundCheck sum_lower_bound_check(const SaddleSystem& sys, const SpectralOptions& opts = {},
                                    double tol = 1e-9);

}  // namespace saddle::bounds
