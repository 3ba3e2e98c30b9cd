#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/spectrum.hpp"
#include "saddle/linalg/sym_matrix.hpp"

namespace saddle::model {

using linalg::RectMatrix;
using linalg::SymMatrix;

struct ValidationOptions {
  double definiteness_tol = 1e-10;  // relative to the largest diagonal magnitude
  bool allow_m_lt_n = false;
};

/// Validated blocks of W = [A B; B^T C]: A (m x m) SPD, B (m x n), C (n x n)
/// negative semidefinite or absent. A zero C is always stored as absent.
class SaddleSystem {
 public:
  /// Throws DimensionError for mismatched blocks or m < n (unless allowed) and
  /// DefinitenessError naming the failing pivot when A or C is rejected.
  static SaddleSystem create(SymMatrix a, RectMatrix b, std::optional<SymMatrix> c = std::nullopt,
                             const ValidationOptions& opts = {});

  std::size_t m() const noexcept { return a_.order(); }
  std::size_t n() const noexcept { return b_.cols(); }
  std::size_t order() const noexcept { return m() + n(); }

  const SymMatrix& a() const noexcept { return a_; }
  const RectMatrix& b() const noexcept { return b_; }
  bool has_c() const noexcept { return c_.has_value(); }
  /// nullptr when C is absent.
  const SymMatrix* c() const noexcept { return c_ ? &*c_ : nullptr; }

 private:
  SaddleSystem(SymMatrix a, RectMatrix b, std::optional<SymMatrix> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  SymMatrix a_;
  RectMatrix b_;
  std::optional<SymMatrix> c_;
};

/// Checks that `a` is SPD by a Cholesky attempt; throws DefinitenessError.
void require_spd(const SymMatrix& a, const char* name = "A");
/// Checks lambda_max(c) < tol * max|diag(c)|; throws DefinitenessError.
void require_negative_semidefinite(const SymMatrix& c, double tol, const char* name = "C");

/// W of order m+n with the blocks placed as [A B; B^T C].
SymMatrix assemble_w(const SaddleSystem& sys);

/// <x, A x> + 2 <x, B y> + <y, C y>.
double quadratic_form(const SaddleSystem& sys, std::span<const double> x, std::span<const double> y);

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
};

/// Eigenvalue sign counts of W from the dense oracle; |lambda| <= zero_tol *
/// max|lambda| counts as zero. Throws CapacityError above the dense cap.
Inertia inertia(const SaddleSystem& sys, const linalg::DenseOptions& opts = {},
                double zero_tol = 1e-10);

}  // namespace saddle::model
