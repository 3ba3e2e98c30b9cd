#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "saddle/bounds/spectral_summary.hpp"
#include "saddle/model/saddle_system.hpp"

namespace saddle::verify {

struct SuiteOptions {
  std::uint64_t seed = 20240617;
  /// Added to the largest dense-oracle eigenvalue. Nonzero values exist only to
  /// show that the suites notice a wrong oracle.
  double oracle_perturbation = 0.0;
  std::size_t max_m = 30;
  bounds::SpectralOptions spectral;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  bool informational = false;  // violations are reported but do not fail the suite
  std::string detail;
  double seconds = 0.0;

  bool passed() const noexcept { return informational || violations == 0; }
};

/// Eigenvalues of the dense oracle, with the configured perturbation applied.
std::vector<double> oracle_spectrum(const linalg::SymMatrix& m, const SuiteOptions& opts);

/// A = I, B = [[1, 0], [0, 0]], C = diag(0, -1): the as-printed negative
/// interval of the Silvester-Wathen bound misses the eigenvalue -1.
model::SaddleSystem silvester_wathen_counterexample();

// Core solvers
PropertyResult check_solver_cross_validation(const SuiteOptions& opts, std::size_t count,
                                             std::size_t max_order = 500, double tol = 1e-8);
PropertyResult check_dense_spectrum_identities(const SuiteOptions& opts, std::size_t count);
PropertyResult check_singular_value_transpose(const SuiteOptions& opts, std::size_t count);
PropertyResult check_matvec_determinism(const SuiteOptions& opts, std::size_t count);

// Saddle model
PropertyResult check_inertia(const SuiteOptions& opts, std::size_t count);
PropertyResult check_quadratic_form(const SuiteOptions& opts, std::size_t count);
PropertyResult check_rayleigh_bounds(const SuiteOptions& opts, std::size_t count);

// Spectral bounds
PropertyResult check_sufficient_condition(const SuiteOptions& opts, std::size_t count);
PropertyResult check_zero_c_strict(const SuiteOptions& opts, std::size_t count);
PropertyResult check_sum_lower_bound(const SuiteOptions& opts, std::size_t count);
PropertyResult check_verdict_consistency(const SuiteOptions& opts, std::size_t count);
PropertyResult survey_necessity(const SuiteOptions& opts, std::size_t count);
PropertyResult check_eta_spectrum(const SuiteOptions& opts, std::size_t count);
PropertyResult check_rusten_winther(const SuiteOptions& opts, std::size_t count);
PropertyResult check_silvester_wathen_corrected(const SuiteOptions& opts, std::size_t count);
/// Informational: counts as-printed containment failures, including the
/// fixed counterexample, which is always checked first.
PropertyResult audit_silvester_wathen_as_printed(const SuiteOptions& opts, std::size_t count);
PropertyResult check_bilinear_extremum(const SuiteOptions& opts, std::size_t instances,
                                       std::size_t samples);

// Stokes assembly
PropertyResult check_stokes_dimensions(const SuiteOptions& opts, std::size_t max_ne = 64);
PropertyResult check_stokes_blocks(const SuiteOptions& opts);

/// Every property with its default instance count.
std::vector<PropertyResult> run_all(const SuiteOptions& opts);

}  // namespace saddle::verify
