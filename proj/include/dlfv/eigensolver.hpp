#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dlfv/core.hpp"
#include "dlfv/potentials.hpp"

namespace dlfv {

/// Symmetric tridiagonal operator over the interior nodes of a grid, with
/// Dirichlet values implied at both endpoints.
struct DiscretizedOperator {
  enum class Form { constant_mass_y, pdm_flux_x };

  std::vector<double> diag;     // size grid.n() - 2
  std::vector<double> offdiag;  // size diag.size() - 1
  Grid1D grid;
  Form form = Form::constant_mass_y;
};

/// Standard 3-point stencil for -d^2/dy^2 + v(y):
/// diag_i = 2/h^2 + v(y_i), offdiag = -1/h^2.
DiscretizedOperator discretize_y(const ScalarField& v, const Grid1D& grid);

/// Conservative flux scheme for -d/dx (1/M) d/dx + v(x):
/// offdiag_i = -(1/M)_{i+1/2}/h^2 with midpoint evaluation of 1/M, and
/// diag_i = ((1/M)_{i-1/2} + (1/M)_{i+1/2})/h^2 + v(x_i). Symmetric by
/// construction; rejects non-positive mass.
DiscretizedOperator discretize_x_pdm(const ScalarField& v, const MassFunction& m,
                                     const Grid1D& grid);

/// Seed for the inverse-iteration start vectors; the environment variable
/// DIRAC_LFV_SEED (an integer) overrides the built-in constant.
std::uint64_t default_seed();

/// k smallest eigenvalues by Sturm-sequence bisection (relative tolerance
/// 1e-12) with eigenvectors from inverse iteration, re-orthogonalized against
/// previously found states and normalized to unit L2 with grid weight h.
Spectrum lowest_eigenpairs(const DiscretizedOperator& op, int k,
                           std::uint64_t seed = default_seed());

using OperatorBuilder = std::function<DiscretizedOperator(const Grid1D&)>;

/// Solves at n and 2n-1 nodes, Richardson-extrapolates the eigenvalues
/// (order 2) and keeps doubling until every per-eigenvalue estimate
/// |lambda_{2n} - lambda_n|/3 clears target_tol or the node cap is reached
/// (converged = false in that case). States belong to the finest solve.
Spectrum refine(const OperatorBuilder& build, const Grid1D& initial, int k, double target_tol,
                int max_nodes = (1 << 20) + 1, std::uint64_t seed = default_seed());

struct Extremum {
  enum class Kind { minimum, maximum, inflection };
  double x = 0.0;
  double value = 0.0;
  Kind kind = Kind::minimum;
};

std::string to_string(Extremum::Kind k);

/// Stationary points of v on the window: v' is bracketed by sign changes over
/// 1e4 subintervals and bisected to 1e-8 in x; the kind comes from the sign
/// of a finite difference of v'. Falls back to a 5-point stencil for v' when
/// the field carries no closed-form derivative.
std::vector<Extremum> find_extrema(const ScalarField& v, Interval domain);

}  // namespace dlfv
