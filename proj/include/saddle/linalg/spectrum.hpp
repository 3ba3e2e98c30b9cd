#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "saddle/errors.hpp"
#include "saddle/linalg/dense_eigen.hpp"
#include "saddle/linalg/operator.hpp"
#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/sym_matrix.hpp"

namespace saddle::linalg {

enum class Which { largest, smallest };

struct EigPair {
  double value = 0.0;
  std::vector<double> vector;  // unit Euclidean norm
  double residual = 0.0;       // ||M v - value v||
  std::size_t iterations = 0;  // operator applications
};

struct LanczosOptions {
  double tol = 1e-10;           // relative to max(|lo|, |hi|) of the spectral enclosure
  std::size_t max_iter = 5000;  // operator applications
  std::size_t subspace = 96;    // basis size before a thick restart
  std::size_t keep = 40;        // Ritz vectors kept across a restart
  std::uint64_t seed = 0x5eed;
};

/// Raised when the Krylov iteration runs out of budget; carries the best iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, EigPair best) : Error(what), best_(std::move(best)) {}
  const EigPair& best() const noexcept { return best_; }

 private:
  EigPair best_;
};

struct DenseOptions {
  std::size_t cap = 1000;
  DenseMethod method = DenseMethod::householder_ql;
};

std::vector<double> matvec(const SymMatrix& m, std::span<const double> x);
std::vector<double> matvec(const RectMatrix& m, std::span<const double> x);

/// Extreme eigenpair by thick-restart Lanczos with full reorthogonalization.
/// Throws InvalidArgument for tol <= 0 and ConvergenceError on budget exhaustion.
EigPair extremal_eig(const SymmetricOperator& op, Which which, const LanczosOptions& opts = {});
EigPair extremal_eig(const SymMatrix& m, Which which, const LanczosOptions& opts = {});

/// All eigenvalues, ascending. Throws CapacityError above opts.cap.
std::vector<double> dense_full_spectrum(const SymMatrix& m, const DenseOptions& opts = {});

/// Singular values of B, descending, one per column (square roots of the
/// eigenvalues of B^T B). Values at round-off level of the Gram spectrum are
/// returned as exact zeros. Throws CapacityError when cols(B) exceeds opts.cap.
std::vector<double> singular_values(const RectMatrix& b, const DenseOptions& opts = {});

/// sigma_max(B); dense for small B, Lanczos on B^T B otherwise.
double largest_singular_value(const RectMatrix& b, const LanczosOptions& lopts = {},
                              const DenseOptions& dopts = {});
/// sigma_n(B) with n = cols(B); zero when rows < cols.
double smallest_singular_value(const RectMatrix& b, const LanczosOptions& lopts = {},
                               const DenseOptions& dopts = {});

/// Count of singular values <= threshold * sigma_max (the column rank defect
/// when rows >= cols).
std::size_t rank_defect(std::span<const double> singular_desc, double threshold = 1e-10);

}  // namespace saddle::linalg
