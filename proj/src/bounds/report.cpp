#include "saddle/bounds/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "saddle/errors.hpp"

namespace saddle::bounds {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

BoundOutcome apply(const auto& compute, std::span<const double> audit_values, double slack) {
  BoundOutcome o;
  try {
    o.bounds = compute();
    o.audit = audit_containment(*o.bounds, audit_values, slack);
  } catch (const HypothesisError& e) {
    o.note = std::string("not applicable: ") + e.what();
  }
  return o;
}

}  // namespace

const char* sign_label(const SpectralSummary& s) noexcept {
  if (s.boundary) return "0";
  return s.s > 0 ? "+" : "-";
}

AnalysisReport build_report(const SaddleSystem& sys, std::optional<double> tau,
                            BoundVariant variant, const SpectralOptions& opts) {
  AnalysisReport r;
  r.m = sys.m();
  r.n = sys.n();
  r.tau = tau;
  r.summary = analyze(sys, opts);
  r.sum_check = sum_lower_bound_check(r.summary, opts.tie_tol);
  r.blocks = block_spectra(sys, opts);

  std::vector<double> audit_values;
  if (sys.order() <= opts.dense.cap) {
    audit_values = linalg::dense_full_spectrum(model::assemble_w(sys), opts.dense);
    r.full_spectrum_audit = true;
  } else {
    audit_values = {r.summary.lambda_min, r.summary.lambda_max};
  }
  const double slack = opts.tie_tol * r.summary.rho;

  r.rusten_winther = apply(
      [&] {
        if (!r.blocks.c_absent) throw HypothesisError("hypothesis C = 0");
        if (!r.blocks.b_full_rank) throw HypothesisError("hypothesis B full-column rank");
        return rusten_winther_bounds(r.blocks);
      },
      audit_values, slack);
  const BoundVariant other =
      variant == BoundVariant::corrected ? BoundVariant::as_printed : BoundVariant::corrected;
  auto sw = [&](BoundVariant v) {
    return apply(
        [&] {
          if (!r.blocks.gram_c_spd) throw HypothesisError("hypothesis B^T B - C positive definite");
          return silvester_wathen_bounds(r.blocks, v);
        },
        audit_values, slack);
  };
  r.silvester_wathen = sw(variant);
  r.silvester_wathen_other = sw(other);
  return r;
}

void write_csv_header(std::ostream& out) {
  out << "m,n,tau,lambda_min_A,lambda_min_C,lambda_max_W,lambda_min_W,S,sign,"
         "condition_value,condition_holds,quasi_pf,quasi_pf_strict,boundary,sum_bound_holds,"
         "rw_neg_lo,rw_neg_hi,rw_pos_lo,rw_pos_hi,rw_outside,"
         "sw_variant,sw_neg_lo,sw_neg_hi,sw_pos_lo,sw_pos_hi,sw_outside\n";
}

namespace {

void csv_bounds(std::ostream& out, const BoundOutcome& o) {
  if (!o.bounds) {
    out << ",,,,NA";
    return;
  }
  const auto& b = *o.bounds;
  out << num(b.neg.lo) << ',' << num(b.neg.hi) << ',' << num(b.pos.lo) << ',' << num(b.pos.hi)
      << ',' << o.audit->outside;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void text_bounds(std::ostream& out, const char* title, const BoundOutcome& o, bool full) {
  out << title << ": ";
  if (!o.bounds) {
    out << o.note << '\n';
    return;
  }
  const auto& b = *o.bounds;
  out << "[" << num(b.neg.lo) << ", " << num(b.neg.hi) << "] U [" << num(b.pos.lo) << ", "
      << num(b.pos.hi) << "]  (" << to_string(b.variant) << ")\n";
  out << "  audit (" << (full ? "full spectrum" : "computed extremes") << "): "
      << o.audit->checked - o.audit->outside << "/" << o.audit->checked << " inside";
  if (!o.audit->ok()) out << ", worst excess " << num(o.audit->worst_excess);
  out << '\n';
}

}  // namespace

void write_csv_row(std::ostream& out, const AnalysisReport& r) {
  const auto& s = r.summary;
  out << r.m << ',' << r.n << ',' << (r.tau ? num(*r.tau) : std::string()) << ','
      << num(s.lambda_min_a) << ',' << num(s.lambda_min_c) << ',' << num(s.lambda_max) << ','
      << num(s.lambda_min) << ',' << num(s.s) << ',' << sign_label(s) << ','
      << num(s.condition_value) << ',' << yes_no(s.condition_holds) << ','
      << yes_no(s.quasi_pf) << ',' << yes_no(s.quasi_pf_strict) << ',' << yes_no(s.boundary)
      << ',' << yes_no(r.sum_check.holds) << ',';
  csv_bounds(out, r.rusten_winther);
  out << ',';
  const auto& sw = r.silvester_wathen;
  out << (sw.bounds ? to_string(sw.bounds->variant) : "") << ',';
  csv_bounds(out, sw);
  out << '\n';
}

void write_text(std::ostream& out, const AnalysisReport& r) {
  const auto& s = r.summary;
  out << "system: m = " << r.m << ", n = " << r.n;
  if (r.tau) out << ", tau = " << num(*r.tau);
  out << (s.c_absent ? ", C = 0" : "") << '\n';
  out << "lambda_max(W) = " << num(s.lambda_max) << '\n';
  out << "lambda_min(W) = " << num(s.lambda_min) << '\n';
  out << "rho(W)        = " << num(s.rho) << '\n';
  out << "S(W)          = " << num(s.s) << "  sign " << sign_label(s)
      << (s.boundary ? "  (boundary: |S| within tie tolerance)" : "") << '\n';
  out << "quasi-PF: " << yes_no(s.quasi_pf) << ", strict: " << yes_no(s.quasi_pf_strict) << '\n';
  out << "lambda_min(A) = " << num(s.lambda_min_a) << ", lambda_min(C) = " << num(s.lambda_min_c)
      << '\n';
  out << "sufficient condition lambda_min(A) + lambda_min(C) = " << num(s.condition_value)
      << (s.condition_holds ? " >= 0 (holds)" : " < 0 (does not hold)") << '\n';
  out << "sum bound: S = " << num(r.sum_check.lhs) << " >= " << num(r.sum_check.rhs) << ": "
      << yes_no(r.sum_check.holds) << '\n';
  out << "sigma_max(B) = " << num(r.blocks.sigma_max) << ", sigma_min(B) = "
      << num(r.blocks.sigma_min) << (r.blocks.b_full_rank ? "" : " (rank deficient)") << '\n';
  text_bounds(out, "Rusten-Winther", r.rusten_winther, r.full_spectrum_audit);
  text_bounds(out, "Silvester-Wathen", r.silvester_wathen, r.full_spectrum_audit);
  text_bounds(out, "Silvester-Wathen", r.silvester_wathen_other, r.full_spectrum_audit);
}

}  // namespace saddle::bounds
