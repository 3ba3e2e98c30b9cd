#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "saddle/linalg/spectrum.hpp"

namespace saddle::linalg {

namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double norm(const double* a, std::size_t n) { return std::sqrt(dot(a, a, n)); }

// Basis vectors stored contiguously, one column after another.
class Basis {
 public:
  Basis(std::size_t n, std::size_t cols) : n_(n), data_(n * cols, 0.0) {}
  double* col(std::size_t j) { return data_.data() + j * n_; }
  const double* col(std::size_t j) const { return data_.data() + j * n_; }

  // Two passes of classical Gram-Schmidt of w against columns [0, count).
  // Accumulated coefficients go to h.
  void orthogonalize(double* w, std::size_t count, std::vector<double>& h) const {
    h.assign(count, 0.0);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < count; ++i) {
        const double c = dot(col(i), w, n_);
        h[i] += c;
        const double* v = col(i);
        for (std::size_t k = 0; k < n_; ++k) w[k] -= c * v[k];
      }
    }
  }

  // out = V[:, 0:d] * y
  void combine(const DenseMatrix& y, std::size_t column, std::size_t d, double* out) const {
    std::fill(out, out + n_, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      const double c = y(i, column);
      const double* v = col(i);
      for (std::size_t k = 0; k < n_; ++k) out[k] += c * v[k];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

void random_unit(std::mt19937_64& rng, double* v, std::size_t n) {
  std::normal_distribution<double> gauss;
  for (std::size_t i = 0; i < n; ++i) v[i] = gauss(rng);
  const double nv = norm(v, n);
  for (std::size_t i = 0; i < n; ++i) v[i] /= nv;
}

EigPair finish(const SymmetricOperator& op, std::vector<double> x, std::size_t iterations) {
  const std::size_t n = x.size();
  const double nx = norm(x.data(), n);
  for (auto& xi : x) xi /= nx;
  std::vector<double> y(n);
  op.apply(x, y);
  const double lambda = dot(x.data(), y.data(), n);
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
  return EigPair{lambda, std::move(x), std::sqrt(r), iterations};
}

}  // namespace

EigPair extremal_eig(const SymmetricOperator& op, Which which, const LanczosOptions& opts) {
  const std::size_t n = op.order();
  if (n == 0) throw DimensionError("extremal_eig: operator of order 0");
  if (!(opts.tol > 0.0)) throw InvalidArgument("extremal_eig: tol must be positive");
  if (opts.max_iter == 0) throw InvalidArgument("extremal_eig: max_iter must be positive");

  const Interval g = op.spectral_enclosure();
  const double scale = std::max(std::abs(g.lo), std::abs(g.hi));
  if (n == 1 || scale == 0.0) {
    std::vector<double> e(n, 0.0);
    e[0] = 1.0;
    return finish(op, std::move(e), 1);
  }

  // Shift by the far end of the enclosure so the wanted end of the spectrum is
  // the one of largest magnitude; the Ritz values are shifted back on exit.
  const double shift = which == Which::largest ? g.lo : g.hi;
  const std::size_t p = std::min<std::size_t>(std::max<std::size_t>(opts.subspace, 4), n);
  const std::size_t keep = std::min(std::max<std::size_t>(opts.keep, 1), p - 1);
  const double threshold = opts.tol * scale;
  const double breakdown = 64.0 * std::numeric_limits<double>::epsilon() * scale;

  std::mt19937_64 rng(opts.seed);
  Basis basis(n, p + 1);
  random_unit(rng, basis.col(0), n);

  DenseMatrix h(p, p);
  std::vector<double> coeff, w(n), ritz(n);
  std::size_t k = 0, iterations = 0;
  EigPair best;
  best.residual = std::numeric_limits<double>::infinity();

  for (;;) {
    std::size_t d = p;
    double beta = 0.0;
    for (std::size_t j = k; j < p; ++j) {
      op.apply(std::span<const double>(basis.col(j), n), w);
      ++iterations;
      const double* vj = basis.col(j);
      for (std::size_t i = 0; i < n; ++i) w[i] -= shift * vj[i];
      basis.orthogonalize(w.data(), j + 1, coeff);
      for (std::size_t i = 0; i <= j; ++i) h(i, j) = h(j, i) = coeff[i];
      beta = norm(w.data(), n);
      if (beta <= breakdown) {
        d = j + 1;
        beta = 0.0;
        break;
      }
      double* next = basis.col(j + 1);
      for (std::size_t i = 0; i < n; ++i) next[i] = w[i] / beta;
      if (j + 1 < p) h(j + 1, j) = h(j, j + 1) = beta;
      if (iterations >= opts.max_iter) {
        d = j + 1;
        break;
      }
    }

    DenseMatrix hd(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) hd(i, j) = h(i, j);
    const DenseEigen proj = symmetric_eigen(hd);
    const std::size_t target = which == Which::largest ? d - 1 : 0;
    const double estimate = std::abs(beta * proj.vectors(d - 1, target));

    if (estimate <= threshold || beta == 0.0 || iterations >= opts.max_iter) {
      basis.combine(proj.vectors, target, d, ritz.data());
      EigPair pair = finish(op, ritz, iterations);
      // Trust the projected estimate only if the true residual agrees with it.
      if (pair.residual <= std::max(10.0 * threshold, breakdown)) return pair;
      if (pair.residual < best.residual) best = pair;
      if (iterations >= opts.max_iter)
        throw ConvergenceError("extremal_eig: no convergence after " +
                                   std::to_string(iterations) + " operator applications",
                               std::move(best));
    }

    // Thick restart: keep the Ritz vectors nearest the wanted end plus the
    // current residual direction.
    const std::size_t kk = std::min(keep, d - 1);
    std::vector<std::size_t> sel(kk);
    for (std::size_t i = 0; i < kk; ++i) sel[i] = which == Which::largest ? d - 1 - i : i;

    Basis kept(n, kk);
    for (std::size_t i = 0; i < kk; ++i) basis.combine(proj.vectors, sel[i], d, kept.col(i));
    for (std::size_t i = 0; i < kk; ++i) std::copy(kept.col(i), kept.col(i) + n, basis.col(i));

    double* resid = basis.col(kk);
    if (beta > 0.0) {
      std::copy(basis.col(d), basis.col(d) + n, resid);
    } else {
      random_unit(rng, resid, n);
    }
    // Re-orthogonalize the carried direction against the new Ritz block.
    basis.orthogonalize(resid, kk, coeff);
    const double nr = norm(resid, n);
    for (std::size_t i = 0; i < n; ++i) resid[i] /= nr;

    h = DenseMatrix(p, p);
    for (std::size_t i = 0; i < kk; ++i) h(i, i) = proj.values[sel[i]];
    k = kk;
  }
}

EigPair extremal_eig(const SymMatrix& m, Which which, const LanczosOptions& opts) {
  return extremal_eig(SymMatrixOperator(m), which, opts);
}

}  // namespace saddle::linalg
