#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "dlfv/catalog.hpp"
#include "dlfv/core.hpp"

namespace dlfv {

/// The coordinate map y(x) = int dx/v_f(x) + const and its inverse.
///
/// Strictly increasing since 1/v_f > 0. Either backed by a scenario's closed
/// form or by a cubic-Hermite table over adaptive quadrature of 1/v_f with
/// exact knot slopes. Inversion brackets on the table (or uses the closed
/// inverse) and finishes with one Newton step, tolerance 1e-12 in y.
class CoordinateMap {
public:
  CoordinateMap() = default;

  double forward(double x) const;
  double inverse(double y) const;
  double y_lo() const { return y_lo_; }
  double y_hi() const { return y_hi_; }
  bool closed_form() const { return closed_; }
  /// dx/dy evaluated at x, i.e. v_f(x).
  double dxdy(double x) const { return dxdy_(x); }

private:
  friend CoordinateMap build_map(const Scenario&, double);
  friend CoordinateMap build_map_quadrature(const VelocityProfile&, Interval, double, double);

  struct Table {
    std::vector<double> xs, ys, slope;  // slope = 1/v_f at the knots
  };

  bool closed_ = false;
  std::function<double(double)> fwd_;
  std::function<double(double)> inv_;
  std::function<double(double)> dxdy_;
  double y_lo_ = 0.0;
  double y_hi_ = 0.0;
  std::shared_ptr<const Table> table_;

  double table_forward(double x) const;
  double table_inverse(double y) const;
};

/// Builds the map for a scenario. Scenarios with a catalogued closed form use
/// it directly (their integration constant already reproduces the standard
/// closed-form maps); otherwise the map is built by quadrature over
/// s.x_solve, anchored to y(anchor_x) = 0.
CoordinateMap build_map(const Scenario& s, double anchor_x = 0.0);

/// Quadrature-built map over a finite window, anchored to
/// y(anchor_x) = anchor_y. Throws when the quadrature fails to converge on a
/// panel (the message names the interval).
CoordinateMap build_map_quadrature(const VelocityProfile& vf, Interval window,
                                   double anchor_x = 0.0, double anchor_y = 0.0);

/// psi(x_i) = Phi(y(x_i)) / sqrt(v_f(x_i)) with shape-preserving (monotone
/// cubic) interpolation of the sampled Phi. Refuses to extrapolate: every
/// y(x_i) must stay inside the sampled y-grid.
std::vector<double> push_wavefunction(const std::vector<double>& phi, const Grid1D& y_grid,
                                      const CoordinateMap& map, const VelocityProfile& vf,
                                      const Grid1D& x_grid);

/// Composes a y_space-tagged field (a function of x) with x(y), yielding a
/// field evaluable on the y-grid. Carries a chain-rule d1 when available.
ScalarField pull_potential(const ScalarField& v_of_x, const CoordinateMap& map);

}  // namespace dlfv
