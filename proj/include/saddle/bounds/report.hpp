#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "saddle/bounds/interval_bounds.hpp"
#include "saddle/bounds/spectral_summary.hpp"

namespace saddle::bounds {

/// One interval-bound theorem applied to a system: either bounds plus an
/// audit, or a note explaining why the theorem does not apply.
struct BoundOutcome {
  std::optional<SpectrumBounds> bounds;
  std::optional<ContainmentAudit> audit;
  std::string note;  // empty when applicable
};

struct AnalysisReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::optional<double> tau;
  SpectralSummary summary;
  SumBoundCheck sum_check;
  BlockSpectra blocks;
  bool full_spectrum_audit = false;  // false: only the two computed extremes were audited
  BoundOutcome rusten_winther;
  BoundOutcome silvester_wathen;  // variant chosen by the caller
  BoundOutcome silvester_wathen_other;
};

/// Runs analyze, the sum bound and both interval theorems. Theorem hypotheses
/// that fail become notes, not errors. The audit uses the full dense spectrum
/// when W fits under the dense cap and the computed extremes otherwise.
AnalysisReport build_report(const SaddleSystem& sys, std::optional<double> tau,
                            BoundVariant variant, const SpectralOptions& opts = {});

/// "+", "-" or "0" (boundary).
const char* sign_label(const SpectralSummary& s) noexcept;

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const AnalysisReport& r);
void write_text(std::ostream& out, const AnalysisReport& r);

}  // namespace saddle::bounds
