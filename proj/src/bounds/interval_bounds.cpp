#include "saddle/bounds/interval_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "saddle/errors.hpp"

namespace saddle::bounds {

const char* to_string(BoundVariant v) noexcept {
  return v == BoundVariant::as_printed ? "as_printed" : "corrected";
}

const char* to_string(BoundTheorem t) noexcept {
  return t == BoundTheorem::rusten_winther ? "rusten_winther" : "silvester_wathen";
}

BoundVariant parse_variant(const std::string& text) {
  if (text == "as_printed") return BoundVariant::as_printed;
  if (text == "corrected") return BoundVariant::corrected;
  throw InvalidArgument("unknown bound variant '" + text + "' (expected as_printed or corrected)");
}

namespace {

constexpr double rank_threshold = 1e-10;

// Positive-part interval shared by both theorems.
Interval positive_part(const BlockSpectra& q) {
  const double l1 = q.a_max;
  return {q.a_min, 0.5 * (l1 + std::sqrt(l1 * l1 + 4.0 * q.sigma_max * q.sigma_max))};
}

}  // namespace

BlockSpectra block_spectra(const SaddleSystem& sys, const SpectralOptions& opts) {
  BlockSpectra q;
  const auto& b = sys.b();
  const bool dense = sys.m() <= opts.dense.cap && sys.n() <= opts.dense.cap;
  q.c_absent = !sys.has_c();

  if (dense) {
    const auto a = linalg::dense_full_spectrum(sys.a(), opts.dense);
    q.a_min = a.front();
    q.a_max = a.back();
    if (const auto* c = sys.c()) {
      const auto cs = linalg::dense_full_spectrum(*c, opts.dense);
      q.c_min = cs.front();
      q.c_max = cs.back();
    }
    const auto sv = linalg::singular_values(b, opts.dense);
    q.sigma_max = sv.front();
    q.sigma_min = b.rows() >= b.cols() ? sv.back() : 0.0;
    q.b_full_rank = b.rows() >= b.cols() && q.sigma_min > rank_threshold * q.sigma_max;

    linalg::DenseMatrix g = b.gram();
    if (const auto* c = sys.c())
      for (const auto& t : c->entries()) {
        g(t.row, t.col) -= t.value;
        if (t.row != t.col) g(t.col, t.row) -= t.value;
      }
    const auto gs = linalg::symmetric_eigen(g, opts.dense.method, false).values;
    q.mu = gs.front();
    q.gram_c_max = gs.back();
    q.gram_c_spd = q.mu > rank_threshold * q.gram_c_max;
    return q;
  }

  q.a_min = block_min(sys.a(), opts);
  q.a_max = block_max(sys.a(), opts);
  if (const auto* c = sys.c()) {
    q.c_min = block_min(*c, opts);
    q.c_max = block_max(*c, opts);
  }
  const linalg::GramOperator gram(b);
  const double g_max = linalg::extremal_eig(gram, linalg::Which::largest, opts.lanczos).value;
  const double g_min = linalg::extremal_eig(gram, linalg::Which::smallest, opts.lanczos).value;
  q.sigma_max = std::sqrt(std::max(g_max, 0.0));
  q.sigma_min = b.rows() >= b.cols() ? std::sqrt(std::max(g_min, 0.0)) : 0.0;
  // Above the dense cap the Gram spectrum is only resolved to the solver
  // tolerance, so a sigma_min^2 within that resolution counts as zero.
  const double resolved = std::max(rank_threshold * rank_threshold, 10.0 * opts.lanczos.tol);
  q.b_full_rank = b.rows() >= b.cols() && g_min > resolved * g_max;

  if (const auto* c = sys.c()) {
    const linalg::GramOperator gram_c(b, c);
    q.mu = linalg::extremal_eig(gram_c, linalg::Which::smallest, opts.lanczos).value;
    q.gram_c_max = linalg::extremal_eig(gram_c, linalg::Which::largest, opts.lanczos).value;
    q.gram_c_spd = q.mu > std::max(rank_threshold, 10.0 * opts.lanczos.tol) * q.gram_c_max;
  } else {
    q.mu = g_min;
    q.gram_c_max = g_max;
    q.gram_c_spd = q.b_full_rank;
  }
  return q;
}

SpectrumBounds rusten_winther_bounds(const BlockSpectra& q) {
  if (!q.c_absent) throw HypothesisError("Rusten-Winther bounds need C = 0");
  if (!q.b_full_rank) throw HypothesisError("Rusten-Winther bounds need B of full column rank");
  const double lm = q.a_min, l1 = q.a_max, s1 = q.sigma_max, sn = q.sigma_min;
  SpectrumBounds r;
  r.theorem = BoundTheorem::rusten_winther;
  r.variant = BoundVariant::corrected;
  r.neg = {0.5 * (lm - std::sqrt(lm * lm + 4.0 * s1 * s1)),
           0.5 * (l1 - std::sqrt(l1 * l1 + 4.0 * sn * sn))};
  r.pos = positive_part(q);
  return r;
}

SpectrumBounds rusten_winther_bounds(const SaddleSystem& sys, const SpectralOptions& opts) {
  if (sys.has_c()) throw HypothesisError("Rusten-Winther bounds need C = 0");
  return rusten_winther_bounds(block_spectra(sys, opts));
}

SpectrumBounds silvester_wathen_bounds(const BlockSpectra& q, BoundVariant variant) {
  if (!q.gram_c_spd)
    throw HypothesisError("Silvester-Wathen bounds need B^T B - C positive definite");
  const double lm = q.a_min, l1 = q.a_max, s1 = q.sigma_max, mu = q.mu;
  SpectrumBounds r;
  r.theorem = BoundTheorem::silvester_wathen;
  r.variant = variant;
  r.pos = positive_part(q);

  if (variant == BoundVariant::as_printed) {
    // Largest eigenvalue of C in the lower end, and the square of the smallest
    // eigenvalue of C - B^T B (that is, -lambda_1(B^T B - C)) under the root.
    const double c1 = q.c_max;
    const double lam_n = -q.gram_c_max;
    r.neg = {0.5 * (c1 + lm - std::sqrt((lm - c1) * (lm - c1) + 4.0 * s1 * s1)),
             0.5 * (l1 - std::sqrt(l1 * l1 + 4.0 * lam_n * lam_n))};
    return r;
  }

  const double cn = q.c_min;
  r.neg.lo = 0.5 * (cn + lm - std::sqrt((lm - cn) * (lm - cn) + 4.0 * s1 * s1));
  // For a negative eigenvalue lambda with eigenvector (x, y), the y-part
  // satisfies lambda <= r(c) for some c in [0, min(mu, -lambda_n(C))], where
  //   r(c) = (l1 - c - sqrt((l1 + c)^2 + 4 (mu - c))) / 2.
  // r is decreasing when l1 + mu >= 1 and convex otherwise, so on that range
  // it never exceeds the larger endpoint value. With l1 + mu >= 1 or C = 0
  // this is just r(0).
  auto r_of = [&](double c) { return 0.5 * (l1 - c - std::sqrt((l1 + c) * (l1 + c) + 4.0 * (mu - c))); };
  const double c_top = std::min(mu, -cn);
  r.neg.hi = std::max(r_of(0.0), r_of(std::max(c_top, 0.0)));
  return r;
}

SpectrumBounds silvester_wathen_bounds(const SaddleSystem& sys, BoundVariant variant,
                                       const SpectralOptions& opts) {
  return silvester_wathen_bounds(block_spectra(sys, opts), variant);
}

ContainmentAudit audit_containment(const SpectrumBounds& b, std::span<const double> spectrum,
                                   double slack) {
  ContainmentAudit a;
  for (double lambda : spectrum) {
    ++a.checked;
    if (b.contains(lambda, slack)) continue;
    ++a.outside;
    a.outside_values.push_back(lambda);
    auto gap = [&](const Interval& i) {
      return lambda < i.lo ? i.lo - lambda : lambda - i.hi;
    };
    a.worst_excess = std::max(a.worst_excess, std::min(gap(b.neg), gap(b.pos)));
  }
  return a;
}

}  // namespace saddle::bounds
