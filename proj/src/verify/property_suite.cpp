#include "saddle/verify/property_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "saddle/bounds/bilinear.hpp"
#include "saddle/bounds/eta_spectrum.hpp"
#include "saddle/bounds/interval_bounds.hpp"
#include "saddle/linalg/matrix_market.hpp"
#include "saddle/stokes/assembly.hpp"
#include "saddle/verify/random_instances.hpp"

namespace saddle::verify {

using bounds::BoundVariant;
using linalg::Which;

namespace {

// Independent random streams, one per property.
enum Stream : std::uint64_t {
  s_cross = 1,
  s_trace,
  s_svd,
  s_matvec,
  s_inertia,
  s_quad,
  s_rayleigh,
  s_condition,
  s_zero_c,
  s_sum,
  s_verdict,
  s_necessity,
  s_eta,
  s_rw,
  s_sw,
  s_sw_printed,
  s_bilinear,
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Records the first violation message; later ones only count.
struct Tally {
  PropertyResult r;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Tally(std::string name, bool informational = false) {
    r.name = std::move(name);
    r.informational = informational;
  }
  void pass() { ++r.checked; }
  void fail(const std::string& what) {
    ++r.checked;
    if (r.violations++ == 0) r.detail = what;
  }
  void check(bool ok, const std::string& what) { ok ? pass() : fail(what); }
  PropertyResult done() {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(r);
  }
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> unit_vector(InstanceGenerator& gen, std::size_t n) {
  std::vector<double> v(n);
  double nv = 0.0;
  for (auto& x : v) {
    x = gen.gauss();
    nv += x * x;
  }
  nv = std::sqrt(nv);
  for (auto& x : v) x /= nv;
  return v;
}

double spectral_scale(std::span<const double> spectrum) {
  return std::max({std::abs(spectrum.front()), std::abs(spectrum.back()), 1e-300});
}

}  // namespace

std::vector<double> oracle_spectrum(const linalg::SymMatrix& m, const SuiteOptions& opts) {
  auto s = linalg::dense_full_spectrum(m, opts.spectral.dense);
  if (opts.oracle_perturbation != 0.0 && !s.empty()) s.back() += opts.oracle_perturbation;
  return s;
}

model::SaddleSystem silvester_wathen_counterexample() {
  const linalg::Triplet b[] = {{0, 0, 1.0}};
  const linalg::Triplet c[] = {{1, 1, -1.0}};
  return model::SaddleSystem::create(linalg::SymMatrix::identity(2),
                                     linalg::RectMatrix::from_triplets(2, 2, b),
                                     linalg::SymMatrix::from_triplets(2, c));
}

PropertyResult check_solver_cross_validation(const SuiteOptions& opts, std::size_t count,
                                             std::size_t max_order, double tol) {
  Tally t("solver_cross_validation");
  auto compare = [&](const linalg::SymMatrix& m, const std::string& label) {
    const auto dense = oracle_spectrum(m, opts);
    const double scale = std::max(std::abs(m.gershgorin().lo), std::abs(m.gershgorin().hi));
    for (Which w : {Which::largest, Which::smallest}) {
      const double want = w == Which::largest ? dense.back() : dense.front();
      const double got = linalg::extremal_eig(m, w, opts.spectral.lanczos).value;
      const double err = std::abs(got - want) / std::max(scale, 1e-300);
      t.check(err <= tol, label + " order " + std::to_string(m.order()) +
                              (w == Which::largest ? " largest" : " smallest") +
                              ": relative error " + fmt(err));
    }
  };

  // The Stokes systems that fit under the order limit, at every viscosity.
  for (auto method : {stokes::Method::p1p0, stokes::Method::q1p0_stab}) {
    for (std::size_t ne : {4u, 8u, 16u}) {
      stokes::StokesGridSpec spec{method, ne, 1.0, 1.0};
      const auto [m, n] = stokes::expected_dims(spec);
      if (m + n > max_order) continue;
      for (double tau : {1e-4, 1e-3, 1e-2, 0.1, 1.0, 10.0}) {
        spec.tau = tau;
        compare(model::assemble_w(stokes::assemble(spec)),
                std::string(stokes::to_string(method)) + " ne " + std::to_string(ne));
      }
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_cross, i));
    switch (i % 4) {
      case 0: {  // saddle W
        compare(model::assemble_w(gen.saddle(opts.max_m)), "random saddle");
        break;
      }
      case 1: {  // prescribed spectrum with repeated and clustered values
        const std::size_t k = gen.uniform_int(1, max_order);
        std::vector<double> v(k);
        for (auto& x : v) x = gen.coin(0.2) ? 1.0 : gen.uniform(-3.0, 3.0);
        compare(gen.with_spectrum(v), "prescribed spectrum");
        break;
      }
      default: {  // sparse random, banded
        const std::size_t k = gen.uniform_int(1, i % 4 == 2 ? 60 : max_order);
        const std::size_t band = gen.uniform_int(0, 5);
        std::vector<linalg::Triplet> e;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = r; c < std::min(k, r + band + 1); ++c)
            if (c == r || gen.coin(0.7)) e.push_back({r, c, gen.gauss()});
        compare(linalg::SymMatrix::from_triplets(k, e), "sparse banded");
        break;
      }
    }
  }
  return t.done();
}

PropertyResult check_dense_spectrum_identities(const SuiteOptions& opts, std::size_t count) {
  Tally t("dense_spectrum_trace_identities");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_trace, i));
    const std::size_t k = gen.uniform_int(1, 80);
    std::vector<linalg::Triplet> e;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = r; c < k; ++c)
        if (gen.coin(0.4)) e.push_back({r, c, gen.gauss()});
    e.push_back({0, 0, 1.0});
    const auto m = linalg::SymMatrix::from_triplets(k, e);
    const auto s = oracle_spectrum(m, opts);
    double sum = 0.0, sq = 0.0;
    for (double x : s) {
      sum += x;
      sq += x * x;
    }
    const double f = m.frobenius_norm();
    const double e1 = std::abs(sum - m.trace()) / f;
    const double e2 = std::abs(sq - f * f) / (f * f);
    t.check(e1 <= 1e-10 && e2 <= 1e-10 && std::is_sorted(s.begin(), s.end()),
            "order " + std::to_string(k) + ": trace error " + fmt(e1) + ", Frobenius error " +
                fmt(e2));
  }
  return t.done();
}

PropertyResult check_singular_value_transpose(const SuiteOptions& opts, std::size_t count) {
  Tally t("singular_values_transpose_symmetry");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_svd, i));
    const std::size_t m = gen.uniform_int(1, 50), n = gen.uniform_int(1, 30);
    const auto b = gen.gaussian_random_rank(m, n);
    if (b.nnz() == 0) {
      t.pass();
      continue;
    }
    auto nonzero = [](std::vector<double> s) {
      s.erase(std::remove(s.begin(), s.end(), 0.0), s.end());
      return s;
    };
    const auto s1 = nonzero(linalg::singular_values(b));
    const auto s2 = nonzero(linalg::singular_values(b.transposed()));
    bool ok = s1.size() == s2.size();
    double worst = 0.0;
    for (std::size_t k = 0; ok && k < s1.size(); ++k)
      worst = std::max(worst, std::abs(s1[k] - s2[k]) / s1.front());
    ok = ok && worst <= 1e-10;
    t.check(ok, std::to_string(m) + "x" + std::to_string(n) + ": nonzero counts " +
                    std::to_string(s1.size()) + " vs " + std::to_string(s2.size()) +
                    ", worst relative gap " + fmt(worst));
  }
  return t.done();
}

PropertyResult check_matvec_determinism(const SuiteOptions& opts, std::size_t count) {
  Tally t("matvec_bit_identical");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_matvec, i));
    const auto sys = gen.saddle(opts.max_m);
    const auto w = model::assemble_w(sys);
    const auto x = unit_vector(gen, w.order());
    const auto y1 = linalg::matvec(w, x), y2 = linalg::matvec(w, x);
    const auto xb = unit_vector(gen, sys.n());
    const auto z1 = linalg::matvec(sys.b(), xb), z2 = linalg::matvec(sys.b(), xb);
    t.check(y1 == y2 && z1 == z2, "repeated products differ");
  }
  return t.done();
}

PropertyResult check_inertia(const SuiteOptions& opts, std::size_t count) {
  Tally t("inertia_positive_m_nonpositive_n");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_inertia, i));
    const auto sys = gen.saddle(opts.max_m);
    const auto in = model::inertia(sys, opts.spectral.dense);
    t.check(in.positive == sys.m() && in.zero + in.negative == sys.n(),
            "m " + std::to_string(sys.m()) + ", n " + std::to_string(sys.n()) + ": inertia (" +
                std::to_string(in.positive) + ", " + std::to_string(in.zero) + ", " +
                std::to_string(in.negative) + ")");
  }
  return t.done();
}

PropertyResult check_quadratic_form(const SuiteOptions& opts, std::size_t count) {
  Tally t("quadratic_form_matches_w");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_quad, i));
    const auto sys = gen.saddle(opts.max_m);
    const auto w = model::assemble_w(sys);
    const auto z = unit_vector(gen, sys.order());
    const std::span<const double> x(z.data(), sys.m()), y(z.data() + sys.m(), sys.n());
    const double f = model::quadratic_form(sys, x, y);
    const double direct = dot(z, w.multiply(z));
    const double scale = w.frobenius_norm();
    // Sign-flip identity: F(-x, y) = F(x, y) - 4 <x, B y>.
    std::vector<double> neg_x(x.begin(), x.end());
    for (auto& v : neg_x) v = -v;
    const double flipped = model::quadratic_form(sys, neg_x, y);
    const double bxy = dot(x, sys.b().multiply(y));
    const double err = std::max(std::abs(f - direct), std::abs(flipped - (f - 4.0 * bxy))) / scale;
    t.check(err <= 1e-12, "relative mismatch " + fmt(err));
  }
  return t.done();
}

PropertyResult check_rayleigh_bounds(const SuiteOptions& opts, std::size_t count) {
  Tally t("rayleigh_quotient_within_extremes");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_rayleigh, i));
    const auto sys = gen.saddle(opts.max_m);
    const auto s = oracle_spectrum(model::assemble_w(sys), opts);
    const double slack = 1e-12 * spectral_scale(s);
    bool ok = true;
    for (int k = 0; k < 20 && ok; ++k) {
      const auto z = unit_vector(gen, sys.order());
      const double f = model::quadratic_form(sys, std::span(z).first(sys.m()),
                                             std::span(z).subspan(sys.m()));
      ok = f >= s.front() - slack && f <= s.back() + slack;
    }
    t.check(ok, "quadratic form left [lambda_min, lambda_max]");
  }
  return t.done();
}

PropertyResult check_sufficient_condition(const SuiteOptions& opts, std::size_t count) {
  Tally t("sufficient_condition_implies_quasi_pf");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_condition, i));
    const auto sys = gen.saddle_condition(opts.max_m);
    const auto s = bounds::analyze(sys, opts.spectral);
    bool ok = s.quasi_pf;
    if (s.condition_value > opts.spectral.tie_tol * s.rho)
      ok = ok && s.quasi_pf_strict && s.lambda_max != -s.lambda_min;
    t.check(ok, "condition " + fmt(s.condition_value) + " but S = " + fmt(s.s));
  }
  return t.done();
}

PropertyResult check_zero_c_strict(const SuiteOptions& opts, std::size_t count) {
  Tally t("zero_c_strict_quasi_pf");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_zero_c, i));
    const auto s = bounds::analyze(gen.saddle_zero_c(opts.max_m), opts.spectral);
    t.check(s.quasi_pf_strict, "C = 0 but S = " + fmt(s.s));
  }
  return t.done();
}

PropertyResult check_sum_lower_bound(const SuiteOptions& opts, std::size_t count) {
  Tally t("sum_of_extremes_lower_bound");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_sum, i));
    // Cycle through the three instance families.
    const auto sys = i % 3 == 0   ? gen.saddle(opts.max_m)
                     : i % 3 == 1 ? gen.saddle_zero_c(opts.max_m)
                                  : gen.saddle_condition(opts.max_m);
    const auto c = bounds::sum_lower_bound_check(sys, opts.spectral, opts.spectral.tie_tol);
    t.check(c.holds, "S = " + fmt(c.lhs) + " < " + fmt(c.rhs));
  }
  return t.done();
}

PropertyResult check_verdict_consistency(const SuiteOptions& opts, std::size_t count) {
  Tally t("quasi_pf_verdict_matches_spectral_radius");
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_verdict, i));
    const auto s = bounds::analyze(gen.saddle(opts.max_m), opts.spectral);
    // rho is an eigenvalue exactly when rho = lambda_max (up to the tie tolerance).
    const bool radius_is_eigenvalue = s.rho - s.lambda_max <= opts.spectral.tie_tol * s.rho;
    t.check(radius_is_eigenvalue == s.quasi_pf, "S = " + fmt(s.s));
  }
  return t.done();
}

PropertyResult survey_necessity(const SuiteOptions& opts, std::size_t count) {
  Tally t("condition_fails_yet_quasi_pf", true);
  std::size_t failing = 0;
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_necessity, i));
    const auto s = bounds::analyze(gen.saddle(opts.max_m), opts.spectral);
    if (s.condition_holds) continue;
    ++failing;
    t.check(!s.quasi_pf, "");
  }
  t.r.detail = std::to_string(t.r.violations) + " of " + std::to_string(failing) +
               " instances with a negative condition value still have the property";
  return t.done();
}

PropertyResult check_eta_spectrum(const SuiteOptions& opts, std::size_t count) {
  Tally t("eta_spectrum_matches_oracle");
  std::size_t deficient = 0;
  for (std::size_t i = 0; i < count; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_eta, i));
    const std::size_t m = gen.uniform_int(1, 20), n = gen.uniform_int(1, m);
    const double eta = gen.log_uniform(1e-2, 1e2);
    const auto b = gen.gaussian_random_rank(m, n);
    const auto e = bounds::explicit_spectrum_eta(eta, b);
    if (e.rank_defect > 0) ++deficient;
    const auto sys = model::SaddleSystem::create(linalg::SymMatrix::identity(m, eta), b);
    const auto want = oracle_spectrum(model::assemble_w(sys), opts);
    const auto got = e.eigenvalues();
    bool ok = got.size() == want.size() && e.zero_mult == e.rank_defect &&
              e.pairs.size() == n - e.rank_defect;
    double worst = 0.0;
    for (std::size_t k = 0; ok && k < got.size(); ++k)
      worst = std::max(worst, std::abs(got[k] - want[k]));
    ok = ok && worst <= 1e-10 * std::max(1.0, spectral_scale(want));
    t.check(ok, "eta " + fmt(eta) + ", " + std::to_string(m) + "x" + std::to_string(n) +
                    ", r " + std::to_string(e.rank_defect) + ": worst gap " + fmt(worst));
  }
  if (t.r.violations == 0)
    t.r.detail = std::to_string(deficient) + " rank-deficient instances included";
  return t.done();
}

PropertyResult check_rusten_winther(const SuiteOptions& opts, std::size_t count) {
  Tally t("rusten_winther_containment");
  std::size_t attempts = 0;
  while (t.r.checked < count && attempts < 20 * count) {
    InstanceGenerator gen(instance_seed(opts.seed, s_rw, attempts++));
    const std::size_t m = gen.uniform_int(1, opts.max_m), n = gen.uniform_int(1, m);
    const auto sys = model::SaddleSystem::create(gen.spd(m), gen.gaussian(m, n));
    const auto q = bounds::block_spectra(sys, opts.spectral);
    if (!q.b_full_rank) continue;
    const auto bnd = bounds::rusten_winther_bounds(q);
    const auto s = oracle_spectrum(model::assemble_w(sys), opts);
    const auto audit = bounds::audit_containment(bnd, s, 1e-9 * spectral_scale(s));
    t.check(audit.ok(), std::to_string(audit.outside) + " eigenvalues outside, excess " +
                            fmt(audit.worst_excess));
  }
  return t.done();
}

namespace {

template <typename Body>
void for_qualifying_sw(const SuiteOptions& opts, std::uint64_t stream, std::size_t count,
                       Tally& t, Body body) {
  std::size_t attempts = 0;
  while (t.r.checked < count && attempts < 20 * count) {
    InstanceGenerator gen(instance_seed(opts.seed, stream, attempts++));
    const auto sys = gen.saddle(opts.max_m);
    const auto q = bounds::block_spectra(sys, opts.spectral);
    if (!q.gram_c_spd) continue;
    body(sys, q);
  }
}

}  // namespace

PropertyResult check_silvester_wathen_corrected(const SuiteOptions& opts, std::size_t count) {
  Tally t("silvester_wathen_corrected_containment");
  for_qualifying_sw(opts, s_sw, count, t, [&](const auto& sys, const auto& q) {
    const auto bnd = bounds::silvester_wathen_bounds(q, BoundVariant::corrected);
    const auto s = oracle_spectrum(model::assemble_w(sys), opts);
    const auto audit = bounds::audit_containment(bnd, s, 1e-9 * spectral_scale(s));
    t.check(audit.ok(), std::to_string(audit.outside) + " eigenvalues outside, excess " +
                            fmt(audit.worst_excess));
  });
  return t.done();
}

PropertyResult audit_silvester_wathen_as_printed(const SuiteOptions& opts, std::size_t count) {
  Tally t("silvester_wathen_as_printed_audit", true);
  {
    const auto sys = silvester_wathen_counterexample();
    const auto bnd = bounds::silvester_wathen_bounds(sys, BoundVariant::as_printed, opts.spectral);
    const auto s = oracle_spectrum(model::assemble_w(sys), opts);
    const auto audit = bounds::audit_containment(bnd, s, 1e-9 * spectral_scale(s));
    std::ostringstream d;
    d << "4x4 counterexample: negative interval [" << bnd.neg.lo << ", " << bnd.neg.hi << "]";
    if (!audit.ok()) d << " misses " << audit.outside_values.front();
    t.check(audit.ok(), d.str());
  }
  for_qualifying_sw(opts, s_sw_printed, count + 1, t, [&](const auto& sys, const auto& q) {
    const auto bnd = bounds::silvester_wathen_bounds(q, BoundVariant::as_printed);
    const auto s = oracle_spectrum(model::assemble_w(sys), opts);
    const auto audit = bounds::audit_containment(bnd, s, 1e-9 * spectral_scale(s));
    t.check(audit.ok(), "");
  });
  t.r.detail = std::to_string(t.r.violations) + " of " + std::to_string(t.r.checked) +
               " systems escape the as-printed intervals; " + t.r.detail;
  return t.done();
}

PropertyResult check_bilinear_extremum(const SuiteOptions& opts, std::size_t instances,
                                       std::size_t samples) {
  Tally t("bilinear_extremum");
  const double half = std::sqrt(0.5);
  for (std::size_t i = 0; i < instances; ++i) {
    InstanceGenerator gen(instance_seed(opts.seed, s_bilinear, i));
    const std::size_t m = i == 0 ? 8 : gen.uniform_int(1, 20);
    const std::size_t n = i == 0 ? 3 : gen.uniform_int(1, 20);
    const auto b = gen.gaussian_random_rank(m, n);
    const auto ext = bounds::bilinear_extremum(b, opts.spectral.lanczos, opts.spectral.dense);
    const double sigma = linalg::singular_values(b).front();
    const double scale = std::max(1.0, sigma);
    double nx = 0.0, ny = 0.0;
    for (double v : ext.x_star) nx += v * v;
    for (double v : ext.y_star) ny += v * v;
    const double achieved = bounds::bilinear_value(b, ext.x_star, ext.y_star);
    const double minimum = bounds::bilinear_value(b, ext.x_min(), ext.y_star);
    const bool ok = std::abs(ext.max_value - 0.5 * sigma) <= 1e-10 * scale &&
                    std::abs(achieved - 0.5 * sigma) <= 1e-10 * scale &&
                    std::abs(minimum + 0.5 * sigma) <= 1e-10 * scale &&
                    std::abs(std::sqrt(nx) - half) <= 1e-12 && std::abs(std::sqrt(ny) - half) <= 1e-12;
    t.check(ok, std::to_string(m) + "x" + std::to_string(n) + ": achieved " + fmt(achieved) +
                    " vs sigma/2 " + fmt(0.5 * sigma));

    // Monte-Carlo domination on the first instance (an 8x3 matrix).
    if (i == 0) {
      double worst = -1.0;
      for (std::size_t k = 0; k < samples; ++k) {
        const auto z = unit_vector(gen, m + n);
        const double v = std::abs(
            bounds::bilinear_value(b, std::span(z).first(m), std::span(z).subspan(m)));
        worst = std::max(worst, v);
      }
      t.check(worst <= ext.max_value + 1e-12, "sample value " + fmt(worst) + " exceeds " +
                                                  fmt(ext.max_value));
    }
  }
  return t.done();
}

PropertyResult check_stokes_dimensions(const SuiteOptions&, std::size_t max_ne) {
  Tally t("stokes_dimensions");
  model::ValidationOptions v;
  v.allow_m_lt_n = true;
  for (auto method : {stokes::Method::p1p0, stokes::Method::q1p0_stab})
    for (std::size_t ne = 2; ne <= max_ne; ++ne) {
      const stokes::StokesGridSpec spec{method, ne, 1.0, 1.0};
      const auto [m, n] = stokes::expected_dims(spec);
      const auto sys = stokes::assemble(spec, v);
      t.check(sys.m() == m && sys.n() == n, std::string(stokes::to_string(method)) + " ne " +
                                                std::to_string(ne) + ": got " +
                                                std::to_string(sys.m()) + "x" +
                                                std::to_string(sys.n()));
    }
  return t.done();
}

PropertyResult check_stokes_blocks(const SuiteOptions& opts) {
  Tally t("stokes_block_structure");
  model::ValidationOptions v;
  v.allow_m_lt_n = true;
  for (std::size_t ne : {2u, 4u, 8u, 16u}) {
    // C semidefinite with lambda_max(C) <= 1e-12.
    const stokes::StokesGridSpec q{stokes::Method::q1p0_stab, ne, 1.0, 1.0};
    const auto qs = stokes::assemble(q, v);
    const double c_max = oracle_spectrum(*qs.c(), opts).back();
    t.check(c_max <= 1e-12, "q1p0_stab ne " + std::to_string(ne) + ": lambda_max(C) " + fmt(c_max));

    // P1-P0 B of full column rank.
    const stokes::StokesGridSpec p{stokes::Method::p1p0, ne, 1.0, 1.0};
    const auto ps = stokes::assemble(p, v);
    const auto sv = linalg::singular_values(ps.b());
    t.check(linalg::rank_defect(sv) == 0,
            "p1p0 ne " + std::to_string(ne) + ": sigma_n " + fmt(sv.back()));

    // tau scales A only; B and C do not move.
    for (const auto& base : {p, q}) {
      auto scaled = base;
      scaled.tau = 7.5;
      const auto s1 = stokes::assemble(base, v), s7 = stokes::assemble(scaled, v);
      bool ok = s1.a().nnz() == s7.a().nnz();
      for (std::size_t k = 0; ok && k < s1.a().nnz(); ++k) {
        const auto& e1 = s1.a().entries()[k];
        const auto& e7 = s7.a().entries()[k];
        ok = e1.row == e7.row && e1.col == e7.col &&
             std::abs(e7.value - 7.5 * e1.value) <= 1e-14 * std::abs(7.5 * e1.value);
      }
      const auto same_entries = [](auto x, auto y) {
        return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](const auto& a, const auto& b) {
          return a.row == b.row && a.col == b.col && a.value == b.value;
        });
      };
      ok = ok && same_entries(s1.b().entries(), s7.b().entries());
      if (s1.c()) ok = ok && same_entries(s1.c()->entries(), s7.c()->entries());
      t.check(ok, std::string(stokes::to_string(base.method)) + " ne " + std::to_string(ne) +
                      ": tau scaling broken");
    }

    // W is symmetric and survives a Matrix Market round trip bit for bit.
    for (const auto* sys : {&qs, &ps}) {
      const auto w = model::assemble_w(*sys);
      std::stringstream buf;
      linalg::write_matrix(buf, w);
      const auto back = linalg::parse_sym_matrix(buf);
      const auto d = w.to_dense();
      bool ok = back.nnz() == w.nnz() && d.transposed().frobenius_norm() == d.frobenius_norm();
      for (std::size_t k = 0; ok && k < w.nnz(); ++k)
        ok = back.entries()[k].value == w.entries()[k].value &&
             back.entries()[k].row == w.entries()[k].row &&
             back.entries()[k].col == w.entries()[k].col;
      for (std::size_t i = 0; ok && i < d.rows(); ++i)
        for (std::size_t j = 0; ok && j < i; ++j) ok = d(i, j) == d(j, i);
      t.check(ok, "ne " + std::to_string(ne) + ": W round trip or symmetry failed");
    }
  }
  return t.done();
}

std::vector<PropertyResult> run_all(const SuiteOptions& opts) {
  std::vector<PropertyResult> out;
  out.push_back(check_solver_cross_validation(opts, 40));
  out.push_back(check_dense_spectrum_identities(opts, 100));
  out.push_back(check_singular_value_transpose(opts, 100));
  out.push_back(check_matvec_determinism(opts, 50));
  out.push_back(check_inertia(opts, 200));
  out.push_back(check_quadratic_form(opts, 200));
  out.push_back(check_rayleigh_bounds(opts, 100));
  out.push_back(check_sufficient_condition(opts, 500));
  out.push_back(check_zero_c_strict(opts, 500));
  out.push_back(check_sum_lower_bound(opts, 300));
  out.push_back(check_verdict_consistency(opts, 200));
  out.push_back(survey_necessity(opts, 200));
  out.push_back(check_eta_spectrum(opts, 100));
  out.push_back(check_rusten_winther(opts, 200));
  out.push_back(check_silvester_wathen_corrected(opts, 200));
  out.push_back(audit_silvester_wathen_as_printed(opts, 200));
  out.push_back(check_bilinear_extremum(opts, 100, 100000));
  out.push_back(check_stokes_dimensions(opts, 64));
  out.push_back(check_stokes_blocks(opts));
  return out;
}

}  // namespace saddle::verify
