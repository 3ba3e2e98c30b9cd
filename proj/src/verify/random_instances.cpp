#include "saddle/verify/random_instances.hpp"

#include <algorithm>
#include <cmath>

namespace saddle::verify {

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1) + 0xbf58476d1ce4e5b9ULL * index;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t InstanceGenerator::uniform_int(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

double InstanceGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double InstanceGenerator::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

bool InstanceGenerator::coin(double p) { return uniform(0.0, 1.0) < p; }

double InstanceGenerator::gauss() { return std::normal_distribution<double>()(rng_); }

DenseMatrix InstanceGenerator::haar(std::size_t k) {
  DenseMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = gauss();
  // Modified Gram-Schmidt on the columns, twice; the column norms stay
  // positive, which is the sign convention that makes Q Haar distributed.
  for (std::size_t j = 0; j < k; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < j; ++p) {
        double d = 0.0;
        for (std::size_t i = 0; i < k; ++i) d += g(i, p) * g(i, j);
        for (std::size_t i = 0; i < k; ++i) g(i, j) -= d * g(i, p);
      }
    double nrm = 0.0;
    for (std::size_t i = 0; i < k; ++i) nrm += g(i, j) * g(i, j);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < k; ++i) g(i, j) /= nrm;
  }
  return g;
}

SymMatrix InstanceGenerator::with_spectrum(std::span<const double> values) {
  const std::size_t k = values.size();
  const DenseMatrix q = haar(k);
  DenseMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      double s = 0.0;
      for (std::size_t p = 0; p < k; ++p) s += q(i, p) * values[p] * q(j, p);
      m(i, j) = m(j, i) = s;
    }
  return SymMatrix::from_dense(m);
}

SymMatrix InstanceGenerator::spd(std::size_t k, double lo, double hi) {
  std::vector<double> v(k);
  for (auto& x : v) x = log_uniform(lo, hi);
  return with_spectrum(v);
}

SymMatrix InstanceGenerator::nsd(std::size_t k, double zero_prob, double lo, double hi) {
  std::vector<double> v(k);
  for (auto& x : v) x = coin(zero_prob) ? 0.0 : -log_uniform(lo, hi);
  return with_spectrum(v);
}

RectMatrix InstanceGenerator::gaussian(std::size_t m, std::size_t n,
                                       std::optional<std::size_t> rank) {
  DenseMatrix b(m, n);
  if (!rank) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = gauss();
  } else if (*rank > 0) {
    DenseMatrix l(m, *rank), r(*rank, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t p = 0; p < *rank; ++p) l(i, p) = gauss();
    for (std::size_t p = 0; p < *rank; ++p)
      for (std::size_t j = 0; j < n; ++j) r(p, j) = gauss();
    b = l * r;
  }
  return RectMatrix::from_dense(b);
}

RectMatrix InstanceGenerator::gaussian_random_rank(std::size_t m, std::size_t n) {
  if (coin(0.5)) return gaussian(m, n);
  return gaussian(m, n, uniform_int(0, std::min(m, n)));
}

model::SaddleSystem InstanceGenerator::saddle(std::size_t max_m, double c_prob) {
  const std::size_t m = uniform_int(1, max_m);
  const std::size_t n = uniform_int(1, m);
  auto a = spd(m);
  auto b = gaussian_random_rank(m, n);
  std::optional<SymMatrix> c;
  if (coin(c_prob)) c = nsd(n);
  return model::SaddleSystem::create(std::move(a), std::move(b), std::move(c));
}

model::SaddleSystem InstanceGenerator::saddle_zero_c(std::size_t max_m) {
  const std::size_t m = uniform_int(1, max_m);
  const std::size_t n = uniform_int(1, m);
  auto a = spd(m);
  return model::SaddleSystem::create(std::move(a), gaussian_random_rank(m, n));
}

model::SaddleSystem InstanceGenerator::saddle_condition(std::size_t max_m) {
  const std::size_t m = uniform_int(1, max_m);
  const std::size_t n = uniform_int(1, m);
  std::vector<double> la(m);
  for (auto& x : la) x = log_uniform(1e-2, 1e2);
  const double a_min = *std::min_element(la.begin(), la.end());
  // C spectrum in [-lambda_min(A), 0]; sometimes one eigenvalue sits exactly
  // at the boundary so the condition holds with equality.
  std::vector<double> lc(n);
  for (auto& x : lc) x = coin(0.3) ? 0.0 : -a_min * uniform(0.0, 1.0);
  if (coin(0.2)) lc[uniform_int(0, n - 1)] = -a_min;
  auto a = with_spectrum(la);
  auto b = gaussian_random_rank(m, n);
  auto c = with_spectrum(lc);
  return model::SaddleSystem::create(std::move(a), std::move(b), std::move(c));
}

}  // namespace saddle::verify
