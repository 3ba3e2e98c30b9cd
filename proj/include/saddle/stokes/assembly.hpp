#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "saddle/model/bundle.hpp"
#include "saddle/model/saddle_system.hpp"

namespace saddle::stokes {

enum class Method {
  p1p0,       // P1 velocity on the refined triangle grid, P0 pressure on the coarse one
  q1p0_stab,  // Q1 velocity, P0 pressure, global pressure-Laplacian stabilization
};

const char* to_string(Method m) noexcept;
/// Accepts "p1p0" and "q1p0_stab"; throws InvalidArgument otherwise.
Method parse_method(const std::string& text);

struct StokesGridSpec {
  Method method = Method::p1p0;
  std::size_t ne = 4;  // coarse squares (p1p0) or squares (q1p0_stab) per side
  double tau = 1.0;    // viscosity, multiplies A only
  double beta = 1.0;   // stabilization weight, q1p0_stab only
};

/// (m, n) without assembling. Throws InvalidArgument for ne < 2.
std::pair<std::size_t, std::size_t> expected_dims(const StokesGridSpec& spec);

/// P1-P0 on the unit square. Velocity: P1 on the uniform grid with 2 ne
/// squares per side, each square cut along its anti-diagonal, Dirichlet nodes
/// deleted. Pressure: one constant per coarse triangle; the mean-zero
/// constraint eliminates the last (corner) triangle by substitution,
/// p_last = -sum of the others. C is absent.
model::SaddleSystem assemble_p1p0(const StokesGridSpec& spec,
                                  const model::ValidationOptions& opts = {});

/// Stabilized Q1-P0 on ne x ne squares. Dirichlet nodes deleted, the last
/// pressure cell deleted, C = -beta h^2 L with L the 5-point Neumann graph
/// Laplacian of the cell grid.
model::SaddleSystem assemble_q1p0_stab(const StokesGridSpec& spec,
                                       const model::ValidationOptions& opts = {});

model::SaddleSystem assemble(const StokesGridSpec& spec, const model::ValidationOptions& opts = {});

/// Header record for a bundle written from this grid: method, ne, tau, beta,
/// pressure constraint and the eliminated pressure index.
model::BundleHeader describe(const StokesGridSpec& spec);

}  // namespace saddle::stokes
