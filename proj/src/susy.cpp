#include "dlfv/susy.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "dlfv/eigensolver.hpp"
#include "dlfv/potentials.hpp"
#include "dlfv/transform.hpp"

namespace dlfv {

PairingReport check_partner_degeneracy(const Spectrum& plus, const Spectrum& minus, double tol,
                                       double shift) {
  if (plus.eps.empty() || minus.eps.empty()) {
    throw std::invalid_argument("check_partner_degeneracy: empty spectrum");
  }
  PairingReport rep;
  rep.tolerance_used = tol;
  rep.shift_used = shift;

  // compare eps_plus against eps_minus + shift; everything above the common
  // ceiling is ignored so that ladder truncation cannot fake mismatches
  rep.ceiling = std::min(plus.eps.back(), minus.eps.back() + shift) + tol;

  std::vector<int> pidx, midx;
  for (size_t i = 0; i < plus.eps.size(); ++i) {
    if (plus.eps[i] <= rep.ceiling) pidx.push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < minus.eps.size(); ++i) {
    if (minus.eps[i] + shift <= rep.ceiling) midx.push_back(static_cast<int>(i));
  }

  std::vector<bool> pused(pidx.size(), false), mused(midx.size(), false);
  while (true) {
    double best = std::numeric_limits<double>::infinity();
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < pidx.size(); ++i) {
      if (pused[i]) continue;
      for (size_t j = 0; j < midx.size(); ++j) {
        if (mused[j]) continue;
        const double d = std::abs(plus.eps[static_cast<size_t>(pidx[i])] -
                                  (minus.eps[static_cast<size_t>(midx[j])] + shift));
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (!std::isfinite(best) || best > tol) break;
    pused[bi] = true;
    mused[bj] = true;
    rep.matched.push_back({pidx[bi], midx[bj], best});
  }
  for (size_t i = 0; i < pidx.size(); ++i) {
    if (!pused[i]) {
      rep.unpaired.push_back({Component::plus, pidx[i], plus.eps[static_cast<size_t>(pidx[i])]});
    }
  }
  for (size_t j = 0; j < midx.size(); ++j) {
    if (!mused[j]) {
      rep.unpaired.push_back({Component::minus, midx[j], minus.eps[static_cast<size_t>(midx[j])]});
    }
  }
  rep.pass = rep.unpaired.size() <= 1;
  return rep;
}

std::vector<double> apply_intertwiner(const std::vector<double>& phi, const Grid1D& y_grid,
                                      const std::function<double(double)>& w_tilde,
                                      IntertwineDirection direction) {
  const size_t n = phi.size();
  if (n != static_cast<size_t>(y_grid.n())) {
    throw std::invalid_argument("apply_intertwiner: phi size does not match the grid");
  }
  const double h = y_grid.spacing();
  if (h > 1e-2 * (y_grid.hi() - y_grid.lo())) {
    std::cerr << "apply_intertwiner: warning, grid too coarse for O(h^2) differentiation (h = "
              << h << ")\n";
  }
  const double dsign = direction == IntertwineDirection::minus_to_plus ? 1.0 : -1.0;

  std::vector<double> out(n);
  out[0] = dsign * (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / (2.0 * h) +
           w_tilde(y_grid.node(0)) * phi[0];
  for (size_t i = 1; i + 1 < n; ++i) {
    const double deriv = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
    out[i] = dsign * deriv + w_tilde(y_grid.node(static_cast<int>(i))) * phi[i];
  }
  out[n - 1] = dsign * (3.0 * phi[n - 1] - 4.0 * phi[n - 2] + phi[n - 3]) / (2.0 * h) +
               w_tilde(y_grid.node(y_grid.n() - 1)) * phi[n - 1];
  return out;
}

IntertwiningReport check_intertwining(const Scenario& s, int n_states, double tol, int grid_n) {
  const CoordinateMap map = build_map(s);
  Interval ywin;
  if (s.y_solve) {
    ywin = *s.y_solve;
  } else {
    ywin = {map.forward(s.x_solve.lo), map.forward(s.x_solve.hi)};
  }
  const Grid1D grid(ywin.lo, ywin.hi, grid_n);
  const double h = grid.spacing();

  const PartnerPotentials pots = partner_potentials_y(s);
  const ScalarField v_minus_y = pull_potential(pots.v_minus, map);
  const ScalarField v_plus_y = pull_potential(pots.v_plus, map);

  const Spectrum minus = lowest_eigenpairs(discretize_y(v_minus_y, grid), n_states);

  const Superpotential w = s.w;
  const CoordinateMap m = map;
  // the inverse is only defined strictly inside the image; wall values enter
  // multiplied by the Dirichlet zeros, so clamping is harmless
  const double pad = 1e-9 * (ywin.hi - ywin.lo);
  const double yl = ywin.lo + pad, yh = ywin.hi - pad;
  auto w_tilde = [w, m, yl, yh](double y) { return w(m.inverse(std::clamp(y, yl, yh))); };

  std::vector<double> vplus(static_cast<size_t>(grid.n()), 0.0);
  for (int i = 1; i + 1 < grid.n(); ++i) vplus[static_cast<size_t>(i)] = v_plus_y(grid.node(i));

  IntertwiningReport rep;
  rep.tol = tol;
  rep.pass = true;
  const int margin = 5;
  for (int j = 0; j < n_states; ++j) {
    const auto& phi = minus.states[static_cast<size_t>(j)];
    const double eps = minus.eps[static_cast<size_t>(j)];
    const std::vector<double> image =
        apply_intertwiner(phi, grid, w_tilde, IntertwineDirection::minus_to_plus);

    double phi_nsq = 0.0, img_nsq = 0.0;
    for (size_t i = 0; i < phi.size(); ++i) {
      phi_nsq += phi[i] * phi[i];
      img_nsq += image[i] * image[i];
    }
    IntertwiningReport::StateResult res;
    res.index = j;
    res.eps = eps;
    res.image_norm_ratio = std::sqrt(img_nsq / phi_nsq);
    if (res.image_norm_ratio <= 1e-3) {
      res.annihilated = true;
      rep.states.push_back(res);
      continue;
    }

    // residual of the plus-branch equation on the interior window; the image
    // need not satisfy the Dirichlet walls, so boundary rows are excluded
    double rsq = 0.0, usq = 0.0;
    for (int i = margin; i + margin < grid.n(); ++i) {
      const size_t idx = static_cast<size_t>(i);
      const double lap = (image[idx - 1] - 2.0 * image[idx] + image[idx + 1]) / (h * h);
      const double r = -lap + (vplus[idx] - eps) * image[idx];
      rsq += r * r;
      usq += image[idx] * image[idx];
    }
    res.residual = std::sqrt(rsq / usq);
    if (res.residual > tol) rep.pass = false;
    rep.states.push_back(res);
  }
  return rep;
}

}  // namespace dlfv
