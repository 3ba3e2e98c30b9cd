#include <doctest.h>

#include <cmath>
#include <numbers>

#include "saddle/bounds/spectral_summary.hpp"
#include "saddle/errors.hpp"
#include "saddle/linalg/spectrum.hpp"
#include "saddle/stokes/assembly.hpp"

using namespace saddle;
using namespace saddle::stokes;
using doctest::Approx;

namespace {

StokesGridSpec grid(Method m, std::size_t ne, double tau = 1.0) {
  StokesGridSpec s;
  s.method = m;
  s.ne = ne;
  s.tau = tau;
  return s;
}

}  // namespace

TEST_CASE("expected dimensions") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(expected_dims(grid(Method::p1p0, 4)) == P{98, 31});
  CHECK(expected_dims(grid(Method::p1p0, 8)) == P{450, 127});
  CHECK(expected_dims(grid(Method::p1p0, 16)) == P{1922, 511});
  CHECK(expected_dims(grid(Method::p1p0, 32)) == P{7938, 2047});
  CHECK(expected_dims(grid(Method::q1p0_stab, 8)) == P{98, 63});
  CHECK(expected_dims(grid(Method::q1p0_stab, 64)) == P{7938, 4095});
  CHECK(expected_dims(grid(Method::q1p0_stab, 2)) == P{2, 3});
  CHECK_THROWS_AS(expected_dims(grid(Method::p1p0, 1)), InvalidArgument);
}

TEST_CASE("smallest stabilized grid needs the m < n override") {
  CHECK_THROWS_AS(assemble(grid(Method::q1p0_stab, 2)), DimensionError);
  model::ValidationOptions v;
  v.allow_m_lt_n = true;
  const auto s = assemble(grid(Method::q1p0_stab, 2), v);
  CHECK(s.m() == 2);
  CHECK(s.n() == 3);
}

TEST_CASE("assembled sizes match the formulas") {
  for (auto m : {Method::p1p0, Method::q1p0_stab})
    for (std::size_t ne = 3; ne <= 6; ++ne) {
      const auto spec = grid(m, ne);
      const auto s = assemble(spec);
      CHECK(std::pair{s.m(), s.n()} == expected_dims(spec));
    }
}

TEST_CASE("P1-P0 stiffness and extreme eigenvalue at ne = 4") {
  const auto s = assemble(grid(Method::p1p0, 4, 10.0));
  CHECK_FALSE(s.has_c());
  const double s7 = std::sin(7.0 * std::numbers::pi / 16.0);
  const double stencil = 10.0 * 8.0 * s7 * s7;
  const auto a = linalg::dense_full_spectrum(s.a());
  CHECK(a.back() == Approx(stencil).epsilon(1e-12));
  const auto w = bounds::analyze(s);
  CHECK(std::abs(w.lambda_max - 76.95595469) / 76.95595469 < 1e-2);
  CHECK(w.quasi_pf_strict);
  const auto sv = linalg::singular_values(s.b());
  CHECK(sv.back() > 1e-10 * sv.front());
}

TEST_CASE("stabilization block anchors") {
  const double anchors[] = {-0.120235, -0.030950, -0.007794};
  std::size_t k = 0;
  for (std::size_t ne : {8, 16, 32}) {
    const auto s = assemble(grid(Method::q1p0_stab, ne));
    REQUIRE(s.has_c());
    bounds::SpectralOptions opts;
    CHECK(std::abs(bounds::block_min(*s.c(), opts) - anchors[k++]) < 1e-3);
    CHECK(bounds::block_max(*s.c(), opts) <= 1e-12);
  }
  // closed-form extreme of the Neumann cell Laplacian; deleting one cell moves it only slightly
  const double h = 1.0 / 8.0, s7 = std::sin(7.0 * std::numbers::pi / 16.0);
  const auto s = assemble(grid(Method::q1p0_stab, 8));
  const auto spec = linalg::dense_full_spectrum(*s.c());
  CHECK(std::abs(spec.front() + h * h * 8.0 * s7 * s7) < 1e-3);
}

TEST_CASE("viscosity scales A only") {
  for (auto m : {Method::p1p0, Method::q1p0_stab}) {
    const auto one = assemble(grid(m, 4, 1.0));
    const auto ten = assemble(grid(m, 4, 0.25));
    REQUIRE(one.a().nnz() == ten.a().nnz());
    for (std::size_t k = 0; k < one.a().nnz(); ++k)
      CHECK(ten.a().entries()[k].value == Approx(0.25 * one.a().entries()[k].value).epsilon(1e-15));
    REQUIRE(one.b().nnz() == ten.b().nnz());
    for (std::size_t k = 0; k < one.b().nnz(); ++k)
      CHECK(ten.b().entries()[k].value == one.b().entries()[k].value);
  }
}

TEST_CASE("method names and header") {
  CHECK(parse_method("p1p0") == Method::p1p0);
  CHECK(parse_method("q1p0_stab") == Method::q1p0_stab);
  CHECK_THROWS_AS(parse_method("q2"), InvalidArgument);
  const auto h = describe(grid(Method::q1p0_stab, 8, 0.1));
  CHECK(h.get("method") == std::optional<std::string>("q1p0_stab"));
  CHECK(h.get("ne") == std::optional<std::string>("8"));
  CHECK(h.get("tau") == std::optional<std::string>("0.1"));
}
