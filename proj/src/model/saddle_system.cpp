#include "saddle/model/saddle_system.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "saddle/errors.hpp"
#include "saddle/linalg/cholesky.hpp"
#include "saddle/linalg/matrix_market.hpp"

namespace saddle::model {

void require_spd(const SymMatrix& a, const char* name) {
  const auto chol = linalg::try_cholesky(a);
  if (!chol.success)
    throw DefinitenessError(std::string(name) + " is not positive definite: pivot " +
                                linalg::format_real(chol.pivot) + " at row " +
                                std::to_string(chol.failed_index),
                            chol.failed_index, chol.pivot);
}

void require_negative_semidefinite(const SymMatrix& c, double tol, const char* name) {
  const double scale = c.max_abs_diagonal() > 0 ? c.max_abs_diagonal() : c.frobenius_norm();
  if (scale == 0.0) return;
  // -C + delta I is positive definite exactly when lambda_max(C) < delta.
  const auto chol = linalg::try_cholesky(c.scaled(-1.0), tol * scale);
  if (!chol.success)
    throw DefinitenessError(std::string(name) +
                                " is not negative semidefinite: pivot of -" + name + " + " +
                                linalg::format_real(tol * scale) + " I is " +
                                linalg::format_real(chol.pivot) + " at row " +
                                std::to_string(chol.failed_index),
                            chol.failed_index, chol.pivot);
}

SaddleSystem SaddleSystem::create(SymMatrix a, RectMatrix b, std::optional<SymMatrix> c,
                                  const ValidationOptions& opts) {
  if (!(opts.definiteness_tol >= 0.0)) throw InvalidArgument("definiteness_tol must be >= 0");
  if (b.rows() != a.order())
    throw DimensionError("B has " + std::to_string(b.rows()) + " rows but A has order " +
                         std::to_string(a.order()));
  if (c && c->order() != b.cols())
    throw DimensionError("C has order " + std::to_string(c->order()) + " but B has " +
                         std::to_string(b.cols()) + " columns");
  if (a.order() < b.cols() && !opts.allow_m_lt_n)
    throw DimensionError("m = " + std::to_string(a.order()) + " < n = " +
                         std::to_string(b.cols()) + " (enable the m < n override to allow it)");
  require_spd(a);
  if (c && c->empty()) c.reset();
  if (c) require_negative_semidefinite(*c, opts.definiteness_tol);
  return SaddleSystem(std::move(a), std::move(b), std::move(c));
}

SymMatrix assemble_w(const SaddleSystem& sys) {
  const std::size_t m = sys.m();
  std::vector<linalg::Triplet> t;
  t.reserve(sys.a().nnz() + sys.b().nnz() + (sys.c() ? sys.c()->nnz() : 0));
  for (const auto& e : sys.a().entries()) t.push_back(e);
  for (const auto& e : sys.b().entries()) t.push_back({e.row, m + e.col, e.value});
  if (const auto* c = sys.c())
    for (const auto& e : c->entries()) t.push_back({m + e.row, m + e.col, e.value});
  return SymMatrix::from_triplets(sys.order(), t);
}

double quadratic_form(const SaddleSystem& sys, std::span<const double> x,
                      std::span<const double> y) {
  if (x.size() != sys.m() || y.size() != sys.n())
    throw DimensionError("quadratic_form: expected x of length " + std::to_string(sys.m()) +
                         " and y of length " + std::to_string(sys.n()));
  auto dot = [](std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };
  double f = dot(x, sys.a().multiply(x)) + 2.0 * dot(x, sys.b().multiply(y));
  if (const auto* c = sys.c()) f += dot(y, c->multiply(y));
  return f;
}

Inertia inertia(const SaddleSystem& sys, const linalg::DenseOptions& opts, double zero_tol) {
  const auto spectrum = linalg::dense_full_spectrum(assemble_w(sys), opts);
  const double scale = std::max(std::abs(spectrum.front()), std::abs(spectrum.back()));
  Inertia in;
  for (double lambda : spectrum) {
    if (std::abs(lambda) <= zero_tol * scale)
      ++in.zero;
    else if (lambda > 0)
      ++in.positive;
    else
      ++in.negative;
  }
  return in;
}

}  // namespace saddle::model
