#include "saddle/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "saddle/bounds/report.hpp"
#include "saddle/cli/tables.hpp"
#include "saddle/errors.hpp"
#include "saddle/linalg/matrix_market.hpp"
#include "saddle/model/bundle.hpp"
#include "saddle/stokes/assembly.hpp"
#include "saddle/verify/property_suite.hpp"

namespace saddle::cli {

namespace fs = std::filesystem;

namespace {

// Sends output to --out when given, else to the command's stream.
void emit(const RunConfig& cfg, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (cfg.out.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw InvalidArgument("cannot open output file '" + cfg.out + "'");
  body(file);
}

bounds::SpectralOptions spectral(const RunConfig& cfg) {
  bounds::SpectralOptions s;
  s.lanczos.tol = cfg.tol;
  s.lanczos.max_iter = cfg.max_iter;
  return s;
}

stokes::StokesGridSpec grid_spec(const RunConfig& cfg, std::size_t ne, double tau) {
  stokes::StokesGridSpec s;
  s.method = stokes::parse_method(cfg.method);
  s.ne = ne;
  s.tau = tau;
  s.beta = cfg.beta;
  return s;
}

model::SaddleSystem demo_system() {
  const linalg::Triplet a[] = {{0, 0, 2.0}};
  const linalg::Triplet b[] = {{0, 0, 1.0}};
  return model::SaddleSystem::create(linalg::SymMatrix::from_triplets(1, a),
                                     linalg::RectMatrix::from_triplets(1, 1, b));
}

struct Loaded {
  model::SaddleSystem system;
  std::optional<double> tau;
};

// A bundle path, or a single grid described by --method/--ne/--tau.
Loaded load_system(const RunConfig& cfg) {
  if (!cfg.bundle.empty()) {
    auto bundle = model::read_bundle(cfg.bundle);
    std::optional<double> tau;
    if (const auto t = bundle.header.get("tau")) {
      try {
        tau = linalg::parse_real(*t);
      } catch (const InvalidArgument&) {
        throw FormatError((fs::path(cfg.bundle) / "header.txt").string(), 0, "bad tau '" + *t + "'");
      }
    }
    return {std::move(bundle.system), tau};
  }
  if (cfg.method.empty())
    throw InvalidArgument("give a bundle directory or --method/--ne/--tau");
  if (cfg.method == "demo") return {demo_system(), std::nullopt};
  if (cfg.ne.size() != 1 || cfg.tau.size() != 1)
    throw InvalidArgument("exactly one --ne and one --tau are needed for a generated system");
  return {stokes::assemble(grid_spec(cfg, cfg.ne[0], cfg.tau[0])), cfg.tau[0]};
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) throw InvalidArgument("gen needs --out <directory>");
  if (cfg.method.empty()) throw InvalidArgument("gen needs --method");
  if (cfg.method == "demo") {
    model::BundleHeader h;
    h.set("provenance", "demo:scalar");
    model::write_bundle(cfg.out, demo_system(), h);
    out << cfg.out << '\n';
    return exit_ok;
  }
  if (cfg.ne.empty() || cfg.tau.empty()) throw InvalidArgument("gen needs --ne and --tau");
  const bool single = cfg.ne.size() == 1 && cfg.tau.size() == 1;
  model::ValidationOptions v;
  v.allow_m_lt_n = true;  // the smallest stabilized grid has m < n
  for (std::size_t ne : cfg.ne)
    for (double tau : cfg.tau) {
      const auto spec = grid_spec(cfg, ne, tau);
      fs::path dir = cfg.out;
      if (!single)
        dir /= cfg.method + "-ne" + std::to_string(ne) + "-tau" + linalg::format_real(tau);
      model::write_bundle(dir, stokes::assemble(spec, v), stokes::describe(spec));
      out << dir.string() << '\n';
    }
  return exit_ok;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto loaded = load_system(cfg);
  const auto report = bounds::build_report(loaded.system, loaded.tau, cfg.variant, spectral(cfg));
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == Format::csv) {
      bounds::write_csv_header(o);
      bounds::write_csv_row(o, report);
    } else {
      bounds::write_text(o, report);
    }
  });
  return exit_ok;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto loaded = load_system(cfg);
  const auto report = bounds::build_report(loaded.system, loaded.tau, cfg.variant, spectral(cfg));
  struct Entry {
    const char* theorem;
    const bounds::BoundOutcome* outcome;
    bounds::BoundVariant variant;
  };
  const bounds::BoundVariant other = cfg.variant == bounds::BoundVariant::corrected
                                         ? bounds::BoundVariant::as_printed
                                         : bounds::BoundVariant::corrected;
  const Entry entries[] = {
      {"rusten_winther", &report.rusten_winther, bounds::BoundVariant::corrected},
      {"silvester_wathen", &report.silvester_wathen, cfg.variant},
      {"silvester_wathen", &report.silvester_wathen_other, other},
  };
  emit(cfg, out, [&](std::ostream& o) {
    o.precision(10);
    if (cfg.format == Format::csv)
      o << "theorem,variant,applicable,neg_lo,neg_hi,pos_lo,pos_hi,audited,outside,note\n";
    for (const auto& e : entries) {
      const auto& b = e.outcome->bounds;
      const auto& a = e.outcome->audit;
      if (cfg.format == Format::csv) {
        o << e.theorem << ',' << bounds::to_string(e.variant) << ',' << (b ? "true" : "false");
        if (b)
          o << ',' << linalg::format_real(b->neg.lo) << ',' << linalg::format_real(b->neg.hi)
            << ',' << linalg::format_real(b->pos.lo) << ',' << linalg::format_real(b->pos.hi)
            << ',' << a->checked << ',' << a->outside << ",\n";
        else
          o << ",,,,,,,\"" << e.outcome->note << "\"\n";
      } else {
        o << e.theorem << " (" << bounds::to_string(e.variant) << "): ";
        if (!b) {
          o << e.outcome->note << '\n';
          continue;
        }
        o << "[" << b->neg.lo << ", " << b->neg.hi << "] U [" << b->pos.lo << ", " << b->pos.hi
          << "], " << a->checked - a->outside << "/" << a->checked << " audited eigenvalues inside ("
          << (report.full_spectrum_audit ? "full spectrum" : "computed extremes") << ")\n";
      }
    }
  });
  return exit_ok;
}

TableOptions table_options(const RunConfig& cfg) {
  TableOptions t;
  t.tol = cfg.tol;
  t.max_iter = cfg.max_iter;
  t.threads = cfg.threads;
  t.ne = cfg.ne;
  t.tau = cfg.tau;
  return t;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = compute_table1(table_options(cfg));
  emit(cfg, out, [&](std::ostream& o) { write_table1(o, rows, cfg.format == Format::csv); });
  bool unconverged = false, negative = false;
  for (const auto& r : rows) {
    if (r.error) {
      unconverged = true;
      err << "row m=" << r.ref.m << " tau=" << r.ref.tau << ": " << *r.error << '\n';
    } else if (!r.positive()) {
      negative = true;
    }
  }
  if (unconverged) return exit_nonconvergence;
  return negative ? exit_property_failure : exit_ok;
}

int cmd_table2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = compute_table2(table_options(cfg));
  emit(cfg, out, [&](std::ostream& o) { write_table2(o, rows, cfg.format == Format::csv); });
  bool unconverged = false, mismatch = false;
  for (const auto& r : rows) {
    if (r.error) {
      unconverged = true;
      err << "row m=" << r.ref.m << " tau=" << r.ref.tau << ": " << *r.error << '\n';
    } else if (!r.sign_matches()) {
      mismatch = true;
    }
  }
  if (unconverged) return exit_nonconvergence;
  return mismatch ? exit_property_failure : exit_ok;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  verify::SuiteOptions s;
  s.seed = cfg.seed;
  s.oracle_perturbation = cfg.oracle_perturbation;
  s.spectral = spectral(cfg);
  const auto results = verify::run_all(s);
  bool ok = true;
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == Format::csv) o << "property,checked,violations,status,detail\n";
    for (const auto& r : results) {
      const char* status = r.informational ? "INFO" : (r.passed() ? "PASS" : "FAIL");
      ok = ok && r.passed();
      if (cfg.format == Format::csv) {
        std::string d = r.detail;
        std::replace(d.begin(), d.end(), '"', '\'');
        o << r.name << ',' << r.checked << ',' << r.violations << ',' << status << ",\"" << d
          << "\"\n";
      } else {
        o << status << "  " << r.name << ": " << r.checked << " checked, " << r.violations
          << " violations" << (r.detail.empty() ? "" : "; " + r.detail) << '\n';
      }
    }
    if (cfg.format == Format::text)
      o << (ok ? "selftest passed" : "selftest FAILED") << " (seed " << cfg.seed << ")\n";
  });
  return ok ? exit_ok : exit_property_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string variant = "corrected", format = "csv";
  const auto hw = std::thread::hardware_concurrency();
  cfg.threads = hw == 0 ? 1 : hw;

  CLI::App app{"Saddle-point matrix spectra: quasi-Perron-Frobenius checks and eigenvalue bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--method", cfg.method, "p1p0, q1p0_stab (or demo for gen/analyze)")
      ->envname("SADDLE_METHOD");
  app.add_option("--ne", cfg.ne, "grid size (repeatable)")->envname("SADDLE_NE")->delimiter(',');
  app.add_option("--tau", cfg.tau, "viscosity (repeatable)")->envname("SADDLE_TAU")->delimiter(',');
  app.add_option("--beta", cfg.beta, "stabilization weight for q1p0_stab")->envname("SADDLE_BETA");
  app.add_option("--tol", cfg.tol, "eigensolver tolerance")->envname("SADDLE_TOL");
  app.add_option("--max-iter", cfg.max_iter, "eigensolver operator applications")
      ->envname("SADDLE_MAX_ITER");
  app.add_option("--variant", variant, "as_printed or corrected")->envname("SADDLE_VARIANT");
  app.add_option("--seed", cfg.seed, "property-suite seed")->envname("SADDLE_SEED");
  app.add_option("--out", cfg.out, "output file (directory for gen)")->envname("SADDLE_OUT");
  app.add_option("--format", format, "csv or text")->envname("SADDLE_FORMAT");
  app.add_option("--threads", cfg.threads, "worker threads for table rows")
      ->envname("SADDLE_THREADS");

  auto* gen = app.add_subcommand("gen", "write a Matrix Market bundle for a Stokes grid");
  auto* analyze = app.add_subcommand("analyze", "full spectral report for a bundle or grid");
  analyze->add_option("bundle", cfg.bundle, "bundle directory");
  auto* bnd = app.add_subcommand("bounds", "interval bounds and containment audit");
  bnd->add_option("bundle", cfg.bundle, "bundle directory");
  auto* t1 = app.add_subcommand("table1", "P1-P0 extreme eigenvalues against the reference");
  auto* t2 = app.add_subcommand("table2", "stabilized Q1-P0 sign pattern against the reference");
  auto* self = app.add_subcommand("selftest", "run the property suites");
  self->add_option("--oracle-perturbation", cfg.oracle_perturbation,
                   "perturb the dense oracle (checks that the suites can fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  }

  try {
    if (!(cfg.tol > 0.0)) throw InvalidArgument("--tol must be positive");
    if (cfg.max_iter == 0) throw InvalidArgument("--max-iter must be positive");
    if (cfg.threads == 0) throw InvalidArgument("--threads must be positive");
    for (double t : cfg.tau)
      if (!(t > 0.0)) throw InvalidArgument("--tau must be positive");
    cfg.variant = bounds::parse_variant(variant);
    if (format == "csv")
      cfg.format = Format::csv;
    else if (format == "text")
      cfg.format = Format::text;
    else
      throw InvalidArgument("--format must be csv or text");
    if (!cfg.method.empty() && cfg.method != "demo") stokes::parse_method(cfg.method);

    if (*gen) return cmd_gen(cfg, out);
    if (*analyze) return cmd_analyze(cfg, out);
    if (*bnd) return cmd_bounds(cfg, out);
    if (*t1) return cmd_table1(cfg, out, err);
    if (*t2) return cmd_table2(cfg, out, err);
    if (*self) return cmd_selftest(cfg, out);
    return exit_config;
  } catch (const linalg::ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return exit_nonconvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace saddle::cli
