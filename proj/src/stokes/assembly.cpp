#include "saddle/stokes/assembly.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "saddle/errors.hpp"
#include "saddle/linalg/matrix_market.hpp"

namespace saddle::stokes {

using linalg::RectMatrix;
using linalg::SymMatrix;
using linalg::Triplet;

const char* to_string(Method m) noexcept { return m == Method::p1p0 ? "p1p0" : "q1p0_stab"; }

Method parse_method(const std::string& text) {
  if (text == "p1p0") return Method::p1p0;
  if (text == "q1p0_stab") return Method::q1p0_stab;
  throw InvalidArgument("unknown method '" + text + "' (expected p1p0 or q1p0_stab)");
}

namespace {

void check_spec(const StokesGridSpec& spec) {
  if (spec.ne < 2) throw InvalidArgument("ne must be at least 2");
  if (!(spec.tau > 0.0) || !std::isfinite(spec.tau)) throw InvalidArgument("tau must be positive");
  if (!(spec.beta >= 0.0) || !std::isfinite(spec.beta))
    throw InvalidArgument("beta must be nonnegative");
}

// Velocity unknowns on an (nodes x nodes) vertex grid with the boundary ring
// removed: interior node (i, j), 1 <= i, j <= nodes - 2, row-major.
struct InteriorGrid {
  std::size_t nodes;  // vertices per side including the boundary

  std::size_t per_side() const { return nodes - 2; }
  std::size_t count() const { return per_side() * per_side(); }
  bool interior(std::size_t i, std::size_t j) const {
    return i > 0 && j > 0 && i + 1 < nodes && j + 1 < nodes;
  }
  std::size_t index(std::size_t i, std::size_t j) const { return (j - 1) * per_side() + (i - 1); }
};

// A = tau * blockdiag(K, K), x components first.
SymMatrix velocity_block(const SymMatrix& k, double tau) {
  const std::size_t count = k.order();
  std::vector<Triplet> t;
  t.reserve(2 * k.nnz());
  for (const auto& e : k.entries()) t.push_back({e.row, e.col, tau * e.value});
  for (const auto& e : k.entries()) t.push_back({count + e.row, count + e.col, tau * e.value});
  return SymMatrix::from_triplets(2 * count, t);
}

struct Vertex {
  std::size_t i, j;
};

}  // namespace

std::pair<std::size_t, std::size_t> expected_dims(const StokesGridSpec& spec) {
  if (spec.ne < 2) throw InvalidArgument("ne must be at least 2");
  const std::size_t ne = spec.ne;
  if (spec.method == Method::p1p0) return {2 * (2 * ne - 1) * (2 * ne - 1), 2 * ne * ne - 1};
  return {2 * (ne - 1) * (ne - 1), ne * ne - 1};
}

model::SaddleSystem assemble_p1p0(const StokesGridSpec& spec, const model::ValidationOptions& opts) {
  if (spec.method != Method::p1p0) throw InvalidArgument("assemble_p1p0 needs method p1p0");
  check_spec(spec);
  const std::size_t ne = spec.ne, nf = 2 * ne;
  const double hf = 1.0 / static_cast<double>(nf);
  const InteriorGrid grid{nf + 1};
  const std::size_t nv = grid.count();
  const std::size_t n_tri = 2 * ne * ne;

  std::vector<Triplet> k, b;
  // Fine square (I, J) is cut from (I+1, J) to (I, J+1). Lower-left triangle
  // first, then upper-right; vertices counter-clockwise.
  for (std::size_t jj = 0; jj < nf; ++jj) {
    for (std::size_t ii = 0; ii < nf; ++ii) {
      const std::size_t ci = ii / 2, cj = jj / 2;
      const std::size_t a = ii % 2, bb = jj % 2;
      const std::size_t coarse = 2 * (cj * ne + ci);
      const std::array<std::array<Vertex, 3>, 2> tris{{
          {{{ii, jj}, {ii + 1, jj}, {ii, jj + 1}}},
          {{{ii + 1, jj}, {ii + 1, jj + 1}, {ii, jj + 1}}},
      }};
      // Which coarse triangle (lower-left or upper-right) holds each fine one.
      const std::array<std::size_t, 2> owner{coarse + (a + bb <= 1 ? 0 : 1),
                                             coarse + (a == 0 && bb == 0 ? 0 : 1)};

      for (std::size_t t = 0; t < 2; ++t) {
        const auto& v = tris[t];
        double x[3], y[3];
        for (std::size_t p = 0; p < 3; ++p) {
          x[p] = static_cast<double>(v[p].i) * hf;
          y[p] = static_cast<double>(v[p].j) * hf;
        }
        const double twice_area = (x[1] - x[0]) * (y[2] - y[0]) - (x[2] - x[0]) * (y[1] - y[0]);
        const double area = 0.5 * twice_area;
        double gx[3], gy[3];
        for (std::size_t p = 0; p < 3; ++p) {
          const std::size_t q = (p + 1) % 3, r = (p + 2) % 3;
          gx[p] = (y[q] - y[r]) / twice_area;
          gy[p] = (x[r] - x[q]) / twice_area;
        }
        for (std::size_t p = 0; p < 3; ++p) {
          if (!grid.interior(v[p].i, v[p].j)) continue;
          const std::size_t row = grid.index(v[p].i, v[p].j);
          for (std::size_t q = 0; q < 3; ++q) {
            if (!grid.interior(v[q].i, v[q].j)) continue;
            const std::size_t col = grid.index(v[q].i, v[q].j);
            if (row <= col) k.push_back({row, col, area * (gx[p] * gx[q] + gy[p] * gy[q])});
          }
          b.push_back({row, owner[t], -area * gx[p]});
          b.push_back({nv + row, owner[t], -area * gy[p]});
        }
      }
    }
  }

  // Mean-zero pressure with equal-area triangles: p_last = -sum of the rest,
  // so column k of the reduced B is b_k - b_last.
  const std::size_t last = n_tri - 1;
  std::vector<Triplet> reduced;
  reduced.reserve(b.size() * 2);
  std::vector<Triplet> last_col;
  for (const auto& e : b) {
    if (e.col == last)
      last_col.push_back(e);
    else
      reduced.push_back(e);
  }
  // Merge duplicates in the last column before spreading it across all others.
  const RectMatrix last_b = RectMatrix::from_triplets(2 * nv, 1, [&] {
    std::vector<Triplet> t;
    for (const auto& e : last_col) t.push_back({e.row, 0, e.value});
    return t;
  }());
  for (const auto& e : last_b.entries())
    for (std::size_t c = 0; c < last; ++c) reduced.push_back({e.row, c, -e.value});

  return model::SaddleSystem::create(velocity_block(SymMatrix::from_triplets(nv, k), spec.tau),
                                     RectMatrix::from_triplets(2 * nv, last, reduced),
                                     std::nullopt, opts);
}

model::SaddleSystem assemble_q1p0_stab(const StokesGridSpec& spec,
                                       const model::ValidationOptions& opts) {
  if (spec.method != Method::q1p0_stab)
    throw InvalidArgument("assemble_q1p0_stab needs method q1p0_stab");
  check_spec(spec);
  const std::size_t ne = spec.ne;
  const double h = 1.0 / static_cast<double>(ne);
  const InteriorGrid grid{ne + 1};
  const std::size_t nv = grid.count();
  const std::size_t cells = ne * ne;
  const std::size_t kept = cells - 1;  // last cell deleted

  // Bilinear stiffness on a square (h-independent in 2D), vertices
  // counter-clockwise from the lower-left corner.
  static constexpr double local[4][4] = {{4, -1, -2, -1}, {-1, 4, -1, -2},
                                         {-2, -1, 4, -1}, {-1, -2, -1, 4}};
  // Integral of d(phi)/dx and d(phi)/dy over the cell, in units of h/2.
  static constexpr double dx[4] = {-1, 1, 1, -1};
  static constexpr double dy[4] = {-1, -1, 1, 1};

  std::vector<Triplet> k, b;
  for (std::size_t j = 0; j < ne; ++j) {
    for (std::size_t i = 0; i < ne; ++i) {
      const std::size_t cell = j * ne + i;
      const std::array<Vertex, 4> v{{{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}}};
      for (std::size_t p = 0; p < 4; ++p) {
        if (!grid.interior(v[p].i, v[p].j)) continue;
        const std::size_t row = grid.index(v[p].i, v[p].j);
        for (std::size_t q = 0; q < 4; ++q) {
          if (!grid.interior(v[q].i, v[q].j)) continue;
          const std::size_t col = grid.index(v[q].i, v[q].j);
          if (row <= col) k.push_back({row, col, local[p][q] / 6.0});
        }
        if (cell < kept) {
          b.push_back({row, cell, -0.5 * h * dx[p]});
          b.push_back({nv + row, cell, -0.5 * h * dy[p]});
        }
      }
    }
  }

  std::vector<Triplet> c;
  const double w = spec.beta * h * h;
  auto couple = [&](std::size_t p, std::size_t q) {
    if (p < kept) c.push_back({p, p, -w});
    if (q < kept) c.push_back({q, q, -w});
    if (p < kept && q < kept) c.push_back({std::min(p, q), std::max(p, q), w});
  };
  for (std::size_t j = 0; j < ne; ++j)
    for (std::size_t i = 0; i < ne; ++i) {
      const std::size_t cell = j * ne + i;
      if (i + 1 < ne) couple(cell, cell + 1);
      if (j + 1 < ne) couple(cell, cell + ne);
    }

  std::optional<SymMatrix> c_block;
  if (w > 0.0) c_block = SymMatrix::from_triplets(kept, c);
  return model::SaddleSystem::create(
      velocity_block(SymMatrix::from_triplets(nv, k), spec.tau),
      RectMatrix::from_triplets(2 * nv, kept, b), std::move(c_block), opts);
}

model::SaddleSystem assemble(const StokesGridSpec& spec, const model::ValidationOptions& opts) {
  return spec.method == Method::p1p0 ? assemble_p1p0(spec, opts) : assemble_q1p0_stab(spec, opts);
}

model::BundleHeader describe(const StokesGridSpec& spec) {
  model::BundleHeader h;
  const auto [m, n] = expected_dims(spec);
  h.set("m", std::to_string(m));
  h.set("n", std::to_string(n));
  h.set("method", to_string(spec.method));
  h.set("ne", std::to_string(spec.ne));
  h.set("tau", linalg::format_real(spec.tau));
  if (spec.method == Method::p1p0) {
    h.set("pressure_constraint", "mean_zero_substitution");
    h.set("eliminated_pressure_index", std::to_string(2 * spec.ne * spec.ne - 1));
  } else {
    h.set("beta", linalg::format_real(spec.beta));
    h.set("pressure_constraint", "column_deletion");
    h.set("eliminated_pressure_index", std::to_string(spec.ne * spec.ne - 1));
  }
  h.set("provenance", std::string("stokes:") + to_string(spec.method));
  return h;
}

}  // namespace saddle::stokes
