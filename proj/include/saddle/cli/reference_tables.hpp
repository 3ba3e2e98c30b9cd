#pragma once

#include <cstddef>
#include <span>

namespace saddle::cli {

/// Published extreme eigenvalues for the P1-P0 family.
struct Table1Reference {
  std::size_t ne, m, n;
  double tau;
  double lambda_max, lambda_min, s;
};

/// Published values for the stabilized Q1-P0 family; sign is '+' or '-'.
struct Table2Reference {
  std::size_t ne, m, n;
  double tau;
  double lambda_min_a, lambda_min_c, lambda_max, lambda_min;
  char sign;
};

std::span<const Table1Reference> table1_reference();
std::span<const Table2Reference> table2_reference();

}  // namespace saddle::cli
