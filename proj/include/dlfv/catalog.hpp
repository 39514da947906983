#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "dlfv/core.hpp"

namespace dlfv {

/// Closed-form coordinate map attached to a scenario whose y(x) = int dx/v_f
/// integrates in elementary terms. y_lo/y_hi are the images of the x-domain
/// endpoints (possibly infinite).
struct ClosedFormMap {
  std::function<double(double)> forward;  // x -> y
  std::function<double(double)> inverse;  // y -> x
  double y_lo = 0.0;
  double y_hi = 0.0;
};

/// A named (W, v_f) system together with solver defaults.
///
/// x_solve is the default truncation window for x-space numerics. y_solve,
/// when set, is the default window for y-space numerics; when absent the
/// drivers use the image of x_solve under the coordinate map. The two windows
/// are independent on purpose: analytic comparisons want the natural y
/// window, equivalence checks want windows matched under the map.
struct Scenario {
  std::string name;
  Superpotential w;
  VelocityProfile vf;
  SystemParams system;
  std::map<std::string, double> params;
  Interval x_domain;
  bool analytic_available = false;
  std::optional<ClosedFormMap> closed_map;
  Interval x_solve;
  std::optional<Interval> y_solve;
  /// Constant offset eps_plus - eps_minus observed between partner spectra
  /// when a Dirichlet wall removes both candidate zero modes (the half-line
  /// oscillator); zero for scenarios with standard one-off pairing.
  double susy_shift = 0.0;
};

/// W = omega0, v_f = a^2 x^2 + 1. The map folds the line into a finite box,
/// so the system is an infinite well in y. Requires a != 0 (at a = 0 the
/// image becomes the whole line and the well structure collapses).
Scenario make_free_particle(double a, double omega0);

/// W = a e^{alpha x} + b, v_f = v0 e^{-alpha x}; a Morse-type pair in x that
/// becomes a shifted half-line oscillator in y. Closed-form spectra are
/// catalogued for b = 0 only.
Scenario make_shifted_oscillator(double v0, double alpha, double a, double b);

/// W = a e^{-alpha x} - b with a = l v0 alpha and b = 1/(2l); the y-space
/// potentials are (l^2 -+ l)/y^2 - 1/y + 1/(4 l^2) on the half line.
/// Requires l > 1/2 so the square root in the quantization exponent,
/// sqrt(1+4r) = 2l-1, takes the positive branch.
Scenario make_coulomb(double v0, double alpha, double l);

/// v_f = 8/(2x^2+1) and zeta(x) = x, so W = zeta - v_f'/2. The minus-branch
/// x-space potential is the CPRS potential x^2 + 8(2x^2-1)/(2x^2+1)^2; the
/// plus branch is its non-polynomial double-well partner.
Scenario make_cprs();

/// User-supplied profiles. Closed-form derivative requirements are enforced
/// by the Superpotential/VelocityProfile constructors.
Scenario make_custom(Superpotential w, VelocityProfile vf, SystemParams system,
                     Interval x_domain, std::string name = "custom");

/// W = zeta - v_f'/2 with W' = zeta' - v_f''/2, both closed form.
Superpotential zeta_to_superpotential(const ScalarField& zeta, const VelocityProfile& vf);

}  // namespace dlfv
