#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "saddle/linalg/dense_matrix.hpp"
#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/sym_matrix.hpp"
#include "saddle/model/saddle_system.hpp"

namespace saddle::verify {

using linalg::DenseMatrix;
using linalg::RectMatrix;
using linalg::SymMatrix;

/// Seed for instance `index` of stream `stream`, independent of evaluation order.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

/// Random matrices for property tests. Symmetric blocks are Q diag(L) Q^T with
/// Q Haar-distributed (QR of a Gaussian matrix, signs fixed).
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform_int(std::size_t lo, std::size_t hi);  // inclusive
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  bool coin(double p);
  double gauss();

  DenseMatrix haar(std::size_t k);
  /// Q diag(values) Q^T.
  SymMatrix with_spectrum(std::span<const double> values);
  /// Eigenvalues log-uniform in [lo, hi].
  SymMatrix spd(std::size_t k, double lo = 1e-2, double hi = 1e2);
  /// Eigenvalues -log-uniform in [lo, hi], each exactly 0 with probability zero_prob.
  SymMatrix nsd(std::size_t k, double zero_prob = 0.3, double lo = 1e-2, double hi = 1e2);
  /// Gaussian m x n of the given rank (product of Gaussian factors).
  RectMatrix gaussian(std::size_t m, std::size_t n, std::optional<std::size_t> rank = std::nullopt);
  /// Rank chosen uniformly in [0, n] half of the time, full otherwise.
  RectMatrix gaussian_random_rank(std::size_t m, std::size_t n);

  /// General valid system with 1 <= n <= m <= max_m; C present with probability c_prob.
  model::SaddleSystem saddle(std::size_t max_m, double c_prob = 0.7);
  /// System with C = 0.
  model::SaddleSystem saddle_zero_c(std::size_t max_m);
  /// System satisfying lambda_min(A) + lambda_min(C) >= 0 (sometimes with equality).
  model::SaddleSystem saddle_condition(std::size_t max_m);

 private:
  std::mt19937_64 rng_;
};

}  // namespace saddle::verify
