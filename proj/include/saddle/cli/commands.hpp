#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "saddle/bounds/interval_bounds.hpp"

namespace saddle::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_config = 2,
  exit_nonconvergence = 3,
  exit_property_failure = 4,
};

enum class Format { csv, text };

struct RunConfig {
  std::string command;
  std::string method;
  std::vector<std::size_t> ne;
  std::vector<double> tau;
  double beta = 1.0;
  double tol = 1e-10;
  std::size_t max_iter = 5000;
  bounds::BoundVariant variant = bounds::BoundVariant::corrected;
  std::uint64_t seed = 20240617;
  std::string out;  // empty: standard output
  Format format = Format::csv;
  std::string bundle;
  std::size_t threads = 1;
  double oracle_perturbation = 0.0;
};

/// Parses arguments (flags override SADDLE_* environment variables) and runs
/// the command. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace saddle::cli
