#include "saddle/cli/tables.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

#include "saddle/bounds/spectral_summary.hpp"
#include "saddle/stokes/assembly.hpp"

namespace saddle::cli {

namespace {

constexpr std::size_t large_order = 9000;

template <typename Ref>
bool selected(const TableOptions& opts, const Ref& r) {
  auto has_ne = opts.ne.empty() || std::find(opts.ne.begin(), opts.ne.end(), r.ne) != opts.ne.end();
  auto has_tau = opts.tau.empty() ||
                 std::any_of(opts.tau.begin(), opts.tau.end(),
                             [&](double t) { return std::abs(t - r.tau) <= 1e-12 * r.tau; });
  return has_ne && has_tau;
}

// Runs job(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) job(i);
    });
  for (auto& th : pool) th.join();
}

std::string f8(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8f", x);
  return buf;
}

std::string e3(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_row(std::ostream& out, const std::vector<std::string>& cells, bool csv,
               const std::vector<std::size_t>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (csv) {
      out << (i ? "," : "") << cells[i];
    } else {
      out << (i ? "  " : "");
      out << std::string(widths[i] > cells[i].size() ? widths[i] - cells[i].size() : 0, ' ')
          << cells[i];
    }
  }
  out << '\n';
}

void write_grid(std::ostream& out, const std::vector<std::vector<std::string>>& grid, bool csv) {
  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  for (const auto& row : grid) write_row(out, row, csv, widths);
}

}  // namespace

linalg::LanczosOptions row_solver(const TableOptions& opts, std::size_t order) {
  linalg::LanczosOptions l;
  l.tol = opts.tol;
  l.max_iter = opts.max_iter;
  if (order >= large_order) {
    l.tol = std::max(l.tol, 1e-8);
    l.max_iter = std::max<std::size_t>(l.max_iter, 20000);
  }
  return l;
}

std::vector<Table1Row> compute_table1(const TableOptions& opts) {
  std::vector<Table1Row> rows;
  for (const auto& r : table1_reference())
    if (selected(opts, r)) rows.push_back({r, std::nullopt});

  parallel_for(rows.size(), opts.threads, [&](std::size_t i) {
    auto& row = rows[i];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const stokes::StokesGridSpec spec{stokes::Method::p1p0, row.ref.ne, row.ref.tau, 1.0};
      const auto w = model::assemble_w(stokes::assemble(spec));
      const auto lopts = row_solver(opts, w.order());
      row.lambda_max = linalg::extremal_eig(w, linalg::Which::largest, lopts).value;
      row.lambda_min = linalg::extremal_eig(w, linalg::Which::smallest, lopts).value;
      row.s = row.lambda_max + row.lambda_min;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.seconds = seconds_since(t0);
  });
  return rows;
}

std::vector<Table2Row> compute_table2(const TableOptions& opts) {
  std::vector<Table2Row> rows;
  for (const auto& r : table2_reference())
    if (selected(opts, r)) rows.push_back({r, std::nullopt});

  parallel_for(rows.size(), opts.threads, [&](std::size_t i) {
    auto& row = rows[i];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const stokes::StokesGridSpec spec{stokes::Method::q1p0_stab, row.ref.ne, row.ref.tau, 1.0};
      const auto sys = stokes::assemble(spec);
      const auto w = model::assemble_w(sys);
      bounds::SpectralOptions so;
      so.lanczos = row_solver(opts, w.order());
      row.lambda_max = linalg::extremal_eig(w, linalg::Which::largest, so.lanczos).value;
      row.lambda_min = linalg::extremal_eig(w, linalg::Which::smallest, so.lanczos).value;
      row.s = row.lambda_max + row.lambda_min;
      row.lambda_min_a = bounds::block_min(sys.a(), so);
      row.lambda_min_c = bounds::block_min(*sys.c(), so);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.seconds = seconds_since(t0);
  });
  return rows;
}

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, bool csv) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"m", "n", "tau", "lambda_max", "lambda_min", "S", "S_positive", "ref_lambda_max",
                  "ref_lambda_min", "ref_S", "dev_lambda_max", "dev_lambda_min", "dev_S", "error"});
  for (const auto& r : rows) {
    std::vector<std::string> c{std::to_string(r.ref.m), std::to_string(r.ref.n), g(r.ref.tau)};
    if (r.error) {
      c.insert(c.end(), {"NA", "NA", "NA", "FAIL"});
    } else {
      c.insert(c.end(), {f8(r.lambda_max), f8(r.lambda_min), f8(r.s), r.positive() ? "PASS" : "FAIL"});
    }
    c.insert(c.end(), {f8(r.ref.lambda_max), f8(r.ref.lambda_min), f8(r.ref.s)});
    if (r.error)
      c.insert(c.end(), {"NA", "NA", "NA", "\"" + *r.error + "\""});
    else
      c.insert(c.end(), {e3(r.dev_max()), e3(r.dev_min()), e3(r.dev_s()), ""});
    grid.push_back(std::move(c));
  }
  write_grid(out, grid, csv);
}

void write_table2(std::ostream& out, const std::vector<Table2Row>& rows, bool csv) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"m", "n", "tau", "lambda_min_A", "lambda_min_C", "lambda_max", "lambda_min",
                  "S", "sign", "condition_value", "ref_sign", "sign_match", "dev_lambda_max",
                  "dev_lambda_min", "error"});
  for (const auto& r : rows) {
    std::vector<std::string> c{std::to_string(r.ref.m), std::to_string(r.ref.n), g(r.ref.tau)};
    if (r.error) {
      c.insert(c.end(), {"NA", "NA", "NA", "NA", "NA", "NA", "NA"});
    } else {
      c.insert(c.end(), {f8(r.lambda_min_a), f8(r.lambda_min_c), f8(r.lambda_max),
                         f8(r.lambda_min), f8(r.s), std::string(1, r.sign()),
                         f8(r.condition_value())});
    }
    c.push_back(std::string(1, r.ref.sign));
    c.push_back(r.sign_matches() ? "PASS" : "FAIL");
    if (r.error)
      c.insert(c.end(), {"NA", "NA", "\"" + *r.error + "\""});
    else
      c.insert(c.end(), {e3(r.dev_max()), e3(r.dev_min()), ""});
    grid.push_back(std::move(c));
  }
  write_grid(out, grid, csv);
}

}  // namespace saddle::cli
