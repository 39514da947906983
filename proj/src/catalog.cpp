#include "dlfv/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace dlfv {

namespace {

constexpr double kPi = std::numbers::pi;

// Exponential profile v_f = v0 e^{-alpha x} shared by the oscillator and
// Coulomb scenarios, with its closed-form map y = e^{alpha x}/(v0 alpha).
VelocityProfile exponential_velocity(double v0, double alpha) {
  auto f = [v0, alpha](double x) { return v0 * std::exp(-alpha * x); };
  auto d1 = [v0, alpha](double x) { return -alpha * v0 * std::exp(-alpha * x); };
  auto d2 = [v0, alpha](double x) { return alpha * alpha * v0 * std::exp(-alpha * x); };
  return VelocityProfile(ScalarField(f, d1, d2), v0);
}

ClosedFormMap exponential_map(double v0, double alpha) {
  ClosedFormMap m;
  m.forward = [v0, alpha](double x) { return std::exp(alpha * x) / (v0 * alpha); };
  m.inverse = [v0, alpha](double y) { return std::log(v0 * alpha * y) / alpha; };
  if (alpha > 0.0) {
    m.y_lo = 0.0;
    m.y_hi = std::numeric_limits<double>::infinity();
  } else {
    m.y_lo = -std::numeric_limits<double>::infinity();
    m.y_hi = 0.0;
  }
  return m;
}

}  // namespace

Scenario make_free_particle(double a, double omega0) {
  if (a == 0.0) {
    throw std::invalid_argument(
        "make_free_particle: a must be nonzero (the y-image degenerates to the full line)");
  }
  Scenario s;
  s.name = "free_particle";
  s.w = Superpotential(ScalarField([omega0](double) { return omega0; },
                                   [](double) { return 0.0; }, [](double) { return 0.0; }));
  const double a2 = a * a;
  s.vf = VelocityProfile(ScalarField([a2](double x) { return a2 * x * x + 1.0; },
                                     [a2](double x) { return 2.0 * a2 * x; },
                                     [a2](double) { return 2.0 * a2; }),
                         1.0);
  s.params = {{"a", a}, {"omega0", omega0}};
  s.x_domain = {};  // full line
  s.analytic_available = true;

  const double half_width = kPi / (2.0 * std::abs(a));
  ClosedFormMap m;
  m.forward = [a](double x) { return std::atan(a * x) / a; };
  m.inverse = [a](double y) { return std::tan(a * y) / a; };
  m.y_lo = -half_width;
  m.y_hi = half_width;
  s.closed_map = m;

  s.x_solve = {-10.0, 10.0};
  s.y_solve = Interval{-half_width, half_width};
  return s;
}

Scenario make_shifted_oscillator(double v0, double alpha, double a, double b) {
  if (!(v0 > 0.0)) throw std::invalid_argument("make_shifted_oscillator: v0 must be positive");
  if (alpha == 0.0) throw std::invalid_argument("make_shifted_oscillator: alpha must be nonzero");
  if (a == 0.0) throw std::invalid_argument("make_shifted_oscillator: a must be nonzero");

  Scenario s;
  s.name = "shifted_oscillator";
  s.w = Superpotential(ScalarField(
      [a, b, alpha](double x) { return a * std::exp(alpha * x) + b; },
      [a, alpha](double x) { return a * alpha * std::exp(alpha * x); },
      [a, alpha](double x) { return a * alpha * alpha * std::exp(alpha * x); }));
  s.vf = exponential_velocity(v0, alpha);
  const double omega = std::sqrt(2.0) * v0 * a * alpha;
  s.params = {{"v0", v0}, {"alpha", alpha}, {"a", a}, {"b", b}, {"omega", omega}};
  s.x_domain = {};
  s.analytic_available = (b == 0.0);
  s.closed_map = exponential_map(v0, alpha);
  s.susy_shift = 2.0 * v0 * a * alpha;  // V+ - V- = 2 v0 a alpha, a constant

  // Half-line well in y: quadratic coefficient c^2 with c = |a| v0 |alpha|.
  // The y = 0 endpoint is regular, so the Dirichlet wall sits exactly there;
  // any cutoff delta > 0 would shift the levels by |Phi'(0)|^2 delta.
  const double c = std::abs(a) * v0 * std::abs(alpha);
  const double lin = 2.0 * a * b * v0 * alpha;
  const double vertex = -lin / (2.0 * c * c);
  const double extent = std::sqrt(130.0) / c + std::max(0.0, vertex);
  s.y_solve = alpha > 0.0 ? Interval{0.0, extent} : Interval{-extent, 0.0};
  // x_solve doubles as the x-vs-y equivalence window; keep v_f^2 mildly
  // graded there so the flux-form matrix norm stays small
  const double ylo_eq = extent / 240.0;
  Interval yeq = alpha > 0.0 ? Interval{ylo_eq, extent} : Interval{-extent, -ylo_eq};
  s.x_solve = {s.closed_map->inverse(yeq.lo), s.closed_map->inverse(yeq.hi)};
  return s;
}

Scenario make_coulomb(double v0, double alpha, double l) {
  if (!(v0 > 0.0)) throw std::invalid_argument("make_coulomb: v0 must be positive");
  if (alpha == 0.0) throw std::invalid_argument("make_coulomb: alpha must be nonzero");
  if (!(l > 0.5)) {
    throw std::invalid_argument(
        "make_coulomb: requires l > 1/2 so that sqrt(1+4r) = 2l-1 takes the positive root");
  }

  const double a = l * v0 * alpha;
  const double b = 1.0 / (2.0 * l);
  Scenario s;
  s.name = "coulomb";
  s.w = Superpotential(ScalarField(
      [a, b, alpha](double x) { return a * std::exp(-alpha * x) - b; },
      [a, alpha](double x) { return -a * alpha * std::exp(-alpha * x); },
      [a, alpha](double x) { return a * alpha * alpha * std::exp(-alpha * x); }));
  s.vf = exponential_velocity(v0, alpha);
  s.params = {{"v0", v0}, {"alpha", alpha}, {"l", l}, {"a", a}, {"b", b}};
  s.x_domain = {};
  s.analytic_available = true;
  s.closed_map = exponential_map(v0, alpha);

  // The 1/y^2 singularity keeps wavefunctions ~ y^l near the origin, so the
  // delta = 1e-3 Dirichlet cutoff perturbs eigenvalues only at O(delta^3).
  Interval ywin = alpha > 0.0 ? Interval{1e-3, 400.0} : Interval{-400.0, -1e-3};
  s.y_solve = ywin;
  // Mild window for the x-vs-y equivalence solves (v_f^2 stays O(10) there).
  Interval yeq = alpha > 0.0 ? Interval{l / 8.0, 30.0 * l} : Interval{-30.0 * l, -l / 8.0};
  s.x_solve = {s.closed_map->inverse(yeq.lo), s.closed_map->inverse(yeq.hi)};
  return s;
}

Scenario make_cprs() {
  Scenario s;
  s.name = "cprs";
  auto t = [](double x) { return 2.0 * x * x + 1.0; };
  s.vf = VelocityProfile(
      ScalarField([t](double x) { return 8.0 / t(x); },
                  [t](double x) {
                    const double tt = t(x);
                    return -32.0 * x / (tt * tt);
                  },
                  [t](double x) {
                    const double tt = t(x);
                    return 32.0 * (6.0 * x * x - 1.0) / (tt * tt * tt);
                  }),
      8.0);
  ScalarField zeta([](double x) { return x; }, [](double) { return 1.0; },
                   [](double) { return 0.0; });
  s.w = zeta_to_superpotential(zeta, s.vf);
  s.x_domain = {};
  s.analytic_available = true;  // constant-mass spectrum 2n - 3
  s.x_solve = {-10.0, 10.0};
  // No elementary closed form is catalogued for this map; drivers build it by
  // quadrature over x_solve and take the y-window from the image.
  return s;
}

Scenario make_custom(Superpotential w, VelocityProfile vf, SystemParams system, Interval x_domain,
                     std::string name) {
  validate(system);
  Scenario s;
  s.name = std::move(name);
  s.w = std::move(w);
  s.vf = std::move(vf);
  s.system = system;
  s.x_domain = x_domain;
  s.analytic_available = false;
  Interval solve = intersect(x_domain, {-10.0, 10.0});
  if (!(solve.lo < solve.hi)) solve = x_domain;
  s.x_solve = solve;
  return s;
}

Superpotential zeta_to_superpotential(const ScalarField& zeta, const VelocityProfile& vf) {
  if (!zeta.has_d1()) {
    throw std::invalid_argument("zeta_to_superpotential: zeta needs a closed-form d1");
  }
  const ScalarField vff = vf.field();
  Interval dom = intersect(zeta.domain(), vff.domain());
  auto f = [zeta, vff](double x) { return zeta(x) - 0.5 * vff.d1(x); };
  auto d1 = [zeta, vff](double x) { return zeta.d1(x) - 0.5 * vff.d2(x); };
  return Superpotential(ScalarField(f, d1, dom));
}

}  // namespace dlfv
