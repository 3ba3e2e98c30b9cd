#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "saddle/bounds/spectral_summary.hpp"
#include "saddle/linalg/sym_matrix.hpp"

namespace saddle::bounds {

using linalg::Interval;

enum class BoundVariant { as_printed, corrected };
enum class BoundTheorem { rusten_winther, silvester_wathen };

const char* to_string(BoundVariant v) noexcept;
const char* to_string(BoundTheorem t) noexcept;
/// Throws InvalidArgument for anything but "as_printed" / "corrected".
BoundVariant parse_variant(const std::string& text);

struct SpectrumBounds {
  Interval neg;
  Interval pos;
  BoundVariant variant = BoundVariant::corrected;
  BoundTheorem theorem = BoundTheorem::rusten_winther;

  bool contains(double lambda, double slack = 0.0) const noexcept {
    return neg.contains(lambda, slack) || pos.contains(lambda, slack);
  }
};

/// The block quantities every interval formula is built from.
struct BlockSpectra {
  double a_min = 0.0, a_max = 0.0;          // lambda_m(A), lambda_1(A)
  double c_min = 0.0, c_max = 0.0;          // lambda_n(C), lambda_1(C); 0 when absent
  double sigma_max = 0.0, sigma_min = 0.0;  // sigma_1(B), sigma_n(B)
  double mu = 0.0;                          // lambda_n(B^T B - C)
  double gram_c_max = 0.0;                  // lambda_1(B^T B - C)
  bool c_absent = true;
  bool b_full_rank = false;                 // sigma_n > 1e-10 sigma_1 (resolution-limited above the dense cap)
  bool gram_c_spd = false;                  // mu > 1e-10 lambda_1(B^T B - C)
};

/// Dense oracle when m and n fit under the dense cap, Krylov solver otherwise.
BlockSpectra block_spectra(const SaddleSystem& sys, const SpectralOptions& opts = {});

/// Requires C = 0 and B of full column rank; throws HypothesisError otherwise.
SpectrumBounds rusten_winther_bounds(const BlockSpectra& q);
SpectrumBounds rusten_winther_bounds(const SaddleSystem& sys, const SpectralOptions& opts = {});

/// Requires B^T B - C positive definite; throws HypothesisError otherwise.
/// `corrected` carries the containment guarantee; `as_printed` reproduces the
/// classical statement term for term and is only audited.
SpectrumBounds silvester_wathen_bounds(const BlockSpectra& q, BoundVariant variant);
SpectrumBounds silvester_wathen_bounds(const SaddleSystem& sys, BoundVariant variant,
                                       const SpectralOptions& opts = {});

struct ContainmentAudit {
  std::size_t checked = 0;
  std::size_t outside = 0;
  double worst_excess = 0.0;  // largest distance of an eigenvalue outside the intervals
  std::vector<double> outside_values;

  bool ok() const noexcept { return outside == 0; }
};

ContainmentAudit audit_containment(const SpectrumBounds& b, std::span<const double> spectrum,
                                   double slack);

}  // namespace saddle::bounds
