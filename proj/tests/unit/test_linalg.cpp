#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "saddle/errors.hpp"
#include "saddle/linalg/cholesky.hpp"
#include "saddle/linalg/dense_eigen.hpp"
#include "saddle/linalg/operator.hpp"
#include "saddle/linalg/spectrum.hpp"
#include "saddle/verify/random_instances.hpp"

using namespace saddle;
using namespace saddle::linalg;
using doctest::Approx;

namespace {

SymMatrix laplacian_3x3() {
  std::vector<Triplet> t;
  auto id = [](std::size_t i, std::size_t j) { return 3 * i + j; };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      t.push_back({id(i, j), id(i, j), 4.0});
      if (i + 1 < 3) t.push_back({id(i, j), id(i + 1, j), -1.0});
      if (j + 1 < 3) t.push_back({id(i, j), id(i, j + 1), -1.0});
    }
  return SymMatrix::from_triplets(9, t);
}

}  // namespace

TEST_CASE("matvec on small matrices") {
  const std::vector<double> ones{1, 1, 1};
  CHECK(matvec(test::diag({1, 2, 3}), ones) == std::vector<double>{1, 2, 3});
  const std::vector<double> e0{1, 0};
  CHECK(matvec(test::sym({{0, 1}, {1, 0}}), e0) == std::vector<double>{0, 1});
  CHECK(matvec(test::rect({{1, 2}, {3, 4}, {5, 6}}), e0) == std::vector<double>{1, 3, 5});
  CHECK_THROWS_AS(matvec(test::diag({1, 2, 3}), e0), DimensionError);
}

TEST_CASE("matvec of the five-point stencil on ones") {
  const std::vector<double> ones(9, 1.0);
  const auto y = matvec(laplacian_3x3(), ones);
  // corners touch two boundary neighbours, edges one, the centre none
  CHECK(y == std::vector<double>{2, 1, 2, 1, 0, 1, 2, 1, 2});
}

TEST_CASE("symmetric storage folds and merges entries") {
  const Triplet t[] = {{1, 0, 2.0}, {0, 1, 1.0}, {0, 0, 3.0}, {1, 1, 0.0}};
  const auto m = SymMatrix::from_triplets(2, t);
  CHECK(m.nnz() == 2);
  CHECK(m.to_dense()(0, 1) == 3.0);
  CHECK(m.to_dense()(1, 0) == 3.0);
  const Triplet bad[] = {{0, 0, std::nan("")}};
  CHECK_THROWS_AS(SymMatrix::from_triplets(1, bad), InvalidArgument);
  const Triplet out[] = {{2, 0, 1.0}};
  CHECK_THROWS_AS(SymMatrix::from_triplets(2, out), DimensionError);
}

TEST_CASE("extremal eigenvalues") {
  const auto d = test::diag({1, 2, 3});
  CHECK(extremal_eig(d, Which::largest).value == Approx(3.0).epsilon(1e-12));
  CHECK(extremal_eig(d, Which::smallest).value == Approx(1.0).epsilon(1e-12));
  const auto m = test::sym({{2, 1}, {1, 2}});
  CHECK(extremal_eig(m, Which::largest).value == Approx(3.0).epsilon(1e-12));
  CHECK(extremal_eig(m, Which::smallest).value == Approx(1.0).epsilon(1e-12));
  const auto p = extremal_eig(laplacian_3x3(), Which::largest);
  CHECK(p.value == Approx(4.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(p.residual < 1e-8);
  CHECK_THROWS_AS(extremal_eig(SymMatrix{}, Which::largest), DimensionError);
  LanczosOptions bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(extremal_eig(m, Which::largest, bad), InvalidArgument);
}

TEST_CASE("non-convergence carries the best iterate") {
  verify::InstanceGenerator gen(7);
  const auto m = gen.spd(300, 1.0, 1e4);
  LanczosOptions opts;
  opts.max_iter = 5;
  opts.subspace = 4;
  opts.keep = 1;
  try {
    (void)extremal_eig(m, Which::smallest, opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best().vector.size() == 300);
    CHECK(std::isfinite(e.best().value));
  }
}

TEST_CASE("dense spectrum") {
  CHECK(dense_full_spectrum(SymMatrix::identity(4)) == std::vector<double>{1, 1, 1, 1});
  const auto r = dense_full_spectrum(test::sym({{0, 1}, {1, 0}}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Approx(-1.0));
  CHECK(r[1] == Approx(1.0));
  const auto w = dense_full_spectrum(test::sym({{2, 1}, {1, 0}}));
  CHECK(w[0] == Approx(1.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(w[1] == Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
  DenseOptions tiny;
  tiny.cap = 3;
  CHECK_THROWS_AS(dense_full_spectrum(SymMatrix::identity(4), tiny), CapacityError);
}

TEST_CASE("both dense methods agree") {
  verify::InstanceGenerator gen(11);
  const auto m = gen.spd(25).to_dense();
  const auto ql = symmetric_eigen(m, DenseMethod::householder_ql, true);
  const auto jac = symmetric_eigen(m, DenseMethod::jacobi, true);
  for (std::size_t i = 0; i < 25; ++i) CHECK(ql.values[i] == Approx(jac.values[i]).epsilon(1e-11));
  // M v = lambda v for the first column
  double r = 0.0;
  for (std::size_t i = 0; i < 25; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < 25; ++k) s += m(i, k) * ql.vectors(k, 0);
    r = std::max(r, std::abs(s - ql.values[0] * ql.vectors(i, 0)));
  }
  CHECK(r < 1e-10);
}

TEST_CASE("singular values") {
  CHECK(singular_values(test::rect({{3, 0}, {0, 4}, {0, 0}})) == std::vector<double>{4, 3});
  CHECK(singular_values(test::rect({{1}, {0}})) == std::vector<double>{1});
  const auto s = singular_values(test::rect({{1, 1}, {1, 1}}));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Approx(2.0).epsilon(1e-14));
  CHECK(s[1] == 0.0);
  CHECK(rank_defect(s) == 1);
  CHECK(largest_singular_value(test::rect({{3, 0}, {0, 4}, {0, 0}})) == Approx(4.0));
  CHECK(smallest_singular_value(test::rect({{3, 0}, {0, 4}, {0, 0}})) == Approx(3.0));
}

TEST_CASE("gram operator applies B^T B - C") {
  const auto b = test::rect({{1, 2}, {0, 1}, {1, 0}});
  const auto c = test::diag({-1, 0});
  const GramOperator g(b, &c);
  std::vector<double> y(2);
  const std::vector<double> x{1, 0};
  g.apply(x, y);
  CHECK(y == std::vector<double>{3, 2});  // (B^T B)(:,0) = (2, 2), minus C adds 1
  const auto e = g.spectral_enclosure();
  CHECK(e.lo <= 4.0 - std::sqrt(5.0));
  CHECK(e.hi >= 4.0 + std::sqrt(5.0));
}

TEST_CASE("cholesky certificate") {
  CHECK(try_cholesky(test::sym({{4, 2}, {2, 3}})).success);
  const auto bad = try_cholesky(test::sym({{1, 2}, {2, 1}}));
  CHECK_FALSE(bad.success);
  CHECK(bad.failed_index == 1);
  CHECK(bad.pivot == Approx(-3.0));
}
