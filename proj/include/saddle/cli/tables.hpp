#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "saddle/cli/reference_tables.hpp"
#include "saddle/linalg/spectrum.hpp"

namespace saddle::cli {

struct TableOptions {
  double tol = 1e-10;
  std::size_t max_iter = 5000;
  std::size_t threads = 1;
  std::vector<std::size_t> ne;  // empty: every grid
  std::vector<double> tau;      // empty: every viscosity
};

/// Solver settings for one row: the largest grids (order ~10^4) get at least
/// tol 1e-8 and 20000 iterations.
linalg::LanczosOptions row_solver(const TableOptions& opts, std::size_t order);

struct Table1Row {
  Table1Reference ref;
  std::optional<std::string> error;  // solver failure; numbers below are then unset
  double lambda_max = 0.0, lambda_min = 0.0, s = 0.0;
  double seconds = 0.0;

  bool positive() const noexcept { return !error && s > 0.0; }
  double dev_max() const noexcept { return (lambda_max - ref.lambda_max) / ref.lambda_max; }
  double dev_min() const noexcept { return (lambda_min - ref.lambda_min) / ref.lambda_min; }
  double dev_s() const noexcept { return (s - ref.s) / ref.s; }
};

struct Table2Row {
  Table2Reference ref;
  std::optional<std::string> error;
  double lambda_min_a = 0.0, lambda_min_c = 0.0, lambda_max = 0.0, lambda_min = 0.0, s = 0.0;
  double seconds = 0.0;

  char sign() const noexcept { return s > 0.0 ? '+' : '-'; }
  bool sign_matches() const noexcept { return !error && sign() == ref.sign; }
  double condition_value() const noexcept { return lambda_min_a + lambda_min_c; }
  double dev_max() const noexcept { return (lambda_max - ref.lambda_max) / ref.lambda_max; }
  double dev_min() const noexcept { return (lambda_min - ref.lambda_min) / ref.lambda_min; }
};

/// Rows are computed independently (in parallel when threads > 1) and
/// returned in reference order.
std::vector<Table1Row> compute_table1(const TableOptions& opts);
std::vector<Table2Row> compute_table2(const TableOptions& opts);

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, bool csv);
void write_table2(std::ostream& out, const std::vector<Table2Row>& rows, bool csv);

}  // namespace saddle::cli
