#pragma once

#include <functional>
#include <vector>

#include "dlfv/catalog.hpp"
#include "dlfv/core.hpp"

namespace dlfv {

/// Partner-spectrum matching result. Every eigenvalue below the comparison
/// ceiling (the smaller of the two top eigenvalues) lands exactly once in
/// matched or unpaired.
struct PairingReport {
  struct Match {
    int plus_index = 0;
    int minus_index = 0;
    double abs_diff = 0.0;
  };
  struct Unpaired {
    Component component = Component::plus;
    int index = 0;
    double eps = 0.0;
  };

  std::vector<Match> matched;
  std::vector<Unpaired> unpaired;
  double tolerance_used = 0.0;
  double shift_used = 0.0;
  double ceiling = 0.0;
  bool pass = false;  // all but at most one unpaired state matched within tol
};

/// Greedy nearest matching of eps_plus against eps_minus + shift. The shift
/// accommodates half-line systems whose Dirichlet wall removes both zero
/// modes and offsets the otherwise degenerate ladders; it is zero for the
/// standard one-off SUSY pairing.
PairingReport check_partner_degeneracy(const Spectrum& plus, const Spectrum& minus, double tol,
                                       double shift = 0.0);

enum class IntertwineDirection { minus_to_plus, plus_to_minus };

/// (d/dy + W~)Phi for minus_to_plus, (-d/dy + W~)Phi for plus_to_minus,
/// with centered differences in the interior and one-sided stencils at the
/// ends. Warns (stderr) when the grid is too coarse, h > 1e-2 * width.
std::vector<double> apply_intertwiner(const std::vector<double>& phi, const Grid1D& y_grid,
                                      const std::function<double(double)>& w_tilde,
                                      IntertwineDirection direction);

struct IntertwiningReport {
  struct StateResult {
    int index = 0;
    double eps = 0.0;
    bool annihilated = false;
    double residual = 0.0;         // relative, over the interior window
    double image_norm_ratio = 0.0;  // |A Phi| / |Phi|
  };
  std::vector<StateResult> states;
  double tol = 0.0;
  bool pass = false;  // every non-annihilated state within tol
};

/// Solves the lowest n_states of H- in y-space, pushes each through the
/// intertwiner and checks it solves the H+ equation at the same eps:
/// relative residual of (H+ - eps) A Phi over the interior, except for
/// annihilated states (|A Phi| ~ 0), which are reported as such.
IntertwiningReport check_intertwining(const Scenario& s, int n_states, double tol,
                                      int grid_n = 8001);

}  // namespace dlfv
