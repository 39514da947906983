#include "dlfv/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dlfv {

namespace {

std::string fmt(double x) {
  char b[40];
  std::snprintf(b, sizeof(b), "%.12g", x);
  return b;
}

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double fa, double b,
                        double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, flm);
  const double right = simpson(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) {
    throw std::runtime_error("coordinate-map quadrature failed to converge on [" + fmt(a) + ", " +
                             fmt(b) + "]");
  }
  return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  return adaptive_simpson(f, a, fa, b, fb, m, fm, simpson(f, a, fa, b, fb, fm), tol, 48);
}

double hermite_eval(double x, double x0, double x1, double y0, double y1, double m0, double m1) {
  const double w = x1 - x0;
  const double t = (x - x0) / w;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * w * m0 +
         (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * w * m1;
}

// Fritsch-Carlson slopes for shape-preserving interpolation on a uniform grid.
std::vector<double> pchip_slopes(const std::vector<double>& v, double h) {
  const size_t m = v.size();
  std::vector<double> d(m - 1);
  for (size_t i = 0; i + 1 < m; ++i) d[i] = (v[i + 1] - v[i]) / h;
  std::vector<double> s(m, 0.0);
  for (size_t i = 1; i + 1 < m; ++i) {
    if (d[i - 1] * d[i] > 0.0) s[i] = 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]);
  }
  auto endpoint = [](double d0, double d1) {
    double s0 = 1.5 * d0 - 0.5 * d1;
    if (s0 * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::abs(s0) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return s0;
  };
  s[0] = endpoint(d[0], m > 2 ? d[1] : d[0]);
  s[m - 1] = endpoint(d[m - 2], m > 2 ? d[m - 3] : d[m - 2]);
  return s;
}

}  // namespace

double CoordinateMap::forward(double x) const {
  if (closed_) return fwd_(x);
  return table_forward(x);
}

double CoordinateMap::inverse(double y) const {
  if (closed_) {
    if (y <= y_lo_ || y >= y_hi_) {
      throw std::domain_error("CoordinateMap::inverse: y = " + fmt(y) + " outside the image (" +
                              fmt(y_lo_) + ", " + fmt(y_hi_) + ")");
    }
    return inv_(y);
  }
  return table_inverse(y);
}

double CoordinateMap::table_forward(double x) const {
  const auto& t = *table_;
  const double slack = 1e-9 * (1.0 + std::abs(x));
  if (x < t.xs.front() - slack || x > t.xs.back() + slack) {
    throw std::domain_error("CoordinateMap::forward: x = " + fmt(x) + " outside the map window [" +
                            fmt(t.xs.front()) + ", " + fmt(t.xs.back()) + "]");
  }
  const double xc = std::clamp(x, t.xs.front(), t.xs.back());
  auto it = std::upper_bound(t.xs.begin(), t.xs.end(), xc);
  size_t i = static_cast<size_t>(std::distance(t.xs.begin(), it));
  if (i == 0) i = 1;
  if (i >= t.xs.size()) i = t.xs.size() - 1;
  return hermite_eval(xc, t.xs[i - 1], t.xs[i], t.ys[i - 1], t.ys[i], t.slope[i - 1], t.slope[i]);
}

double CoordinateMap::table_inverse(double y) const {
  const auto& t = *table_;
  const double slack = 1e-9 * (1.0 + std::abs(y));
  if (y < t.ys.front() - slack || y > t.ys.back() + slack) {
    throw std::domain_error("CoordinateMap::inverse: y = " + fmt(y) + " outside the image [" +
                            fmt(t.ys.front()) + ", " + fmt(t.ys.back()) + "]");
  }
  const double yc = std::clamp(y, t.ys.front(), t.ys.back());
  auto it = std::upper_bound(t.ys.begin(), t.ys.end(), yc);
  size_t i = static_cast<size_t>(std::distance(t.ys.begin(), it));
  if (i == 0) i = 1;
  if (i >= t.ys.size()) i = t.ys.size() - 1;

  double lo = t.xs[i - 1], hi = t.xs[i];
  for (int iter = 0; iter < 80 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (table_forward(mid) < yc) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  // one Newton polish step, dx/dy = v_f
  x += (yc - table_forward(x)) * dxdy_(x);
  return std::clamp(x, t.xs[i - 1], t.xs[i]);
}

CoordinateMap build_map(const Scenario& s, double anchor_x) {
  if (s.closed_map) {
    CoordinateMap m;
    m.closed_ = true;
    m.fwd_ = s.closed_map->forward;
    m.inv_ = s.closed_map->inverse;
    m.y_lo_ = s.closed_map->y_lo;
    m.y_hi_ = s.closed_map->y_hi;
    const VelocityProfile vf = s.vf;
    m.dxdy_ = [vf](double x) { return vf(x); };
    return m;
  }
  if (!s.x_solve.finite()) {
    throw std::invalid_argument(
        "build_map: scenario '" + s.name +
        "' has no closed-form map and no finite x_solve window for quadrature");
  }
  return build_map_quadrature(s.vf, s.x_solve, anchor_x, 0.0);
}

CoordinateMap build_map_quadrature(const VelocityProfile& vf, Interval window, double anchor_x,
                                   double anchor_y) {
  if (!window.finite() || !(window.lo < window.hi)) {
    throw std::invalid_argument("build_map_quadrature: finite window required");
  }
  if (anchor_x < window.lo || anchor_x > window.hi) {
    throw std::invalid_argument("build_map_quadrature: anchor outside window");
  }
  const VelocityProfile v = vf;
  auto integrand = [v](double x) {
    const double w = v(x);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::domain_error("build_map_quadrature: v_f not strictly positive at x = " + fmt(x));
    }
    return 1.0 / w;
  };

  int npanels = 4096;
  auto table = std::make_shared<CoordinateMap::Table>();
  for (;;) {
    auto& t = *table;
    t.xs.assign(static_cast<size_t>(npanels) + 1, 0.0);
    t.ys.assign(t.xs.size(), 0.0);
    t.slope.assign(t.xs.size(), 0.0);
    const double h = window.width() / npanels;
    for (size_t i = 0; i < t.xs.size(); ++i) {
      t.xs[i] = i + 1 == t.xs.size() ? window.hi : window.lo + static_cast<double>(i) * h;
      t.slope[i] = integrand(t.xs[i]);
    }
    bool monotone = true;
    for (size_t i = 1; i < t.xs.size(); ++i) {
      const double inc =
          integrate(integrand, t.xs[i - 1], t.xs[i], 1e-14 * std::max(1.0, std::abs(h)));
      t.ys[i] = t.ys[i - 1] + inc;
      // sufficient condition for a monotone Hermite cubic on this panel
      const double delta = inc / h;
      if (!(inc > 0.0) || t.slope[i - 1] > 3.0 * delta || t.slope[i] > 3.0 * delta) {
        monotone = false;
      }
    }
    if (monotone) break;
    npanels *= 2;
    if (npanels > (1 << 16)) {
      throw std::runtime_error("build_map_quadrature: could not build a monotone map table");
    }
  }

  CoordinateMap m;
  m.closed_ = false;
  m.table_ = table;
  m.dxdy_ = [v](double x) { return v(x); };

  // fix the integration constant: y(anchor_x) = anchor_y
  const double y_at_anchor = m.table_forward(anchor_x);
  auto shifted = std::make_shared<CoordinateMap::Table>(*table);
  for (auto& y : shifted->ys) y += anchor_y - y_at_anchor;
  m.table_ = shifted;
  m.y_lo_ = shifted->ys.front();
  m.y_hi_ = shifted->ys.back();
  return m;
}

std::vector<double> push_wavefunction(const std::vector<double>& phi, const Grid1D& y_grid,
                                      const CoordinateMap& map, const VelocityProfile& vf,
                                      const Grid1D& x_grid) {
  if (phi.size() != static_cast<size_t>(y_grid.n())) {
    throw std::invalid_argument("push_wavefunction: phi size does not match the y-grid");
  }
  const double hy = y_grid.spacing();
  const std::vector<double> slopes = pchip_slopes(phi, hy);

  std::vector<double> psi(static_cast<size_t>(x_grid.n()));
  for (int i = 0; i < x_grid.n(); ++i) {
    const double x = x_grid.node(i);
    const double y = map.forward(x);
    const double slack = 1e-9 * (1.0 + std::abs(y));
    if (y < y_grid.lo() - slack || y > y_grid.hi() + slack) {
      throw std::domain_error("push_wavefunction: extrapolation refused, y(x = " + fmt(x) +
                              ") = " + fmt(y) + " leaves the sampled range");
    }
    const double yc = std::clamp(y, y_grid.lo(), y_grid.hi());
    size_t j = static_cast<size_t>((yc - y_grid.lo()) / hy);
    if (j + 1 >= phi.size()) j = phi.size() - 2;
    const double y0 = y_grid.node(static_cast<int>(j));
    const double y1 = y_grid.node(static_cast<int>(j) + 1);
    const double value = hermite_eval(yc, y0, y1, phi[j], phi[j + 1], slopes[j], slopes[j + 1]);
    psi[static_cast<size_t>(i)] = value / std::sqrt(vf(x));
  }
  return psi;
}

ScalarField pull_potential(const ScalarField& v_of_x, const CoordinateMap& map) {
  const ScalarField v = v_of_x;
  const CoordinateMap m = map;
  Interval dom{map.y_lo(), map.y_hi()};
  if (v.has_d1()) {
    return ScalarField([v, m](double y) { return v(m.inverse(y)); },
                       [v, m](double y) {
                         const double x = m.inverse(y);
                         return v.d1(x) * m.dxdy(x);
                       },
                       dom);
  }
  return ScalarField([v, m](double y) { return v(m.inverse(y)); }, dom);
}

}  // namespace dlfv
