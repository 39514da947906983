#include "dlfv/core.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dlfv {

namespace {

std::string format_coord(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

bool Interval::finite() const { return std::isfinite(lo) && std::isfinite(hi); }

Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

std::string to_string(Component c) { return c == Component::plus ? "plus" : "minus"; }

std::string to_string(Coordinate c) { return c == Coordinate::x_space ? "x" : "y"; }

Grid1D::Grid1D(double lo, double hi, int n) : lo_(lo), hi_(hi), n_(n) {
  if (!(lo < hi)) {
    throw std::invalid_argument("Grid1D: requires lo < hi, got [" + format_coord(lo) + ", " +
                                format_coord(hi) + "]");
  }
  if (n < 3) {
    throw std::invalid_argument("Grid1D: requires n >= 3, got n = " + std::to_string(n));
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("Grid1D: endpoints must be finite");
  }
  spacing_ = (hi - lo) / (n - 1);
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> out(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<size_t>(i)] = node(i);
  return out;
}

Grid1D make_grid(double lo, double hi, int n) { return Grid1D(lo, hi, n); }

ScalarField::ScalarField(Fn f, Interval domain) : f_(std::move(f)), domain_(domain) {
  if (!f_) throw std::invalid_argument("ScalarField: evaluator required");
}

ScalarField::ScalarField(Fn f, Fn d1, Interval domain)
    : f_(std::move(f)), d1_(std::move(d1)), domain_(domain) {
  if (!f_) throw std::invalid_argument("ScalarField: evaluator required");
}

ScalarField::ScalarField(Fn f, Fn d1, Fn d2, Interval domain)
    : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)), domain_(domain) {
  if (!f_) throw std::invalid_argument("ScalarField: evaluator required");
}

double ScalarField::d1(double x) const {
  if (!d1_) throw std::logic_error("ScalarField: no closed-form first derivative");
  return d1_(x);
}

double ScalarField::d2(double x) const {
  if (!d2_) throw std::logic_error("ScalarField: no closed-form second derivative");
  return d2_(x);
}

std::vector<double> sample_field(const ScalarField& f, const Grid1D& g) {
  std::vector<double> out(static_cast<size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) {
    const double x = g.node(i);
    if (!f.domain().contains(x)) {
      throw std::domain_error("sample_field: x = " + format_coord(x) +
                              " outside the field domain");
    }
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw std::domain_error("sample_field: field not finite at x = " + format_coord(x));
    }
    out[static_cast<size_t>(i)] = v;
  }
  return out;
}

DerivativeReport check_derivatives(const ScalarField& f, const Grid1D& g, double tol) {
  if (!f.has_d1()) throw std::logic_error("check_derivatives: field has no d1");
  const double h = g.spacing();
  if (!f.domain().contains(g.lo()) || !f.domain().contains(g.hi())) {
    throw std::domain_error("check_derivatives: grid leaves the field domain");
  }

  DerivativeReport rep;
  rep.checked_d2 = f.has_d2();
  auto scan = [&](double s, double& d1_err, double& d2_err) {
    for (int i = 1; i + 1 < g.n(); ++i) {
      const double x = g.node(i);
      const double fd1 = (f(x + s) - f(x - s)) / (2.0 * s);
      const double e1 = std::abs(f.d1(x) - fd1) / (1.0 + std::abs(f.d1(x)));
      d1_err = std::max(d1_err, e1);
      if (rep.checked_d2) {
        const double fd2 = (f(x + s) - 2.0 * f(x) + f(x - s)) / (s * s);
        const double e2 = std::abs(f.d2(x) - fd2) / (1.0 + std::abs(f.d2(x)));
        d2_err = std::max(d2_err, e2);
      }
    }
  };
  scan(h, rep.d1_err_coarse, rep.d2_err_coarse);
  scan(h / 2.0, rep.d1_err, rep.d2_err);
  rep.d1_ratio = rep.d1_err > 0.0 ? rep.d1_err_coarse / rep.d1_err : 0.0;
  rep.d2_ratio = rep.d2_err > 0.0 ? rep.d2_err_coarse / rep.d2_err : 0.0;
  rep.pass = rep.d1_err <= tol && (!rep.checked_d2 || rep.d2_err <= tol);
  return rep;
}

VelocityProfile::VelocityProfile(ScalarField field, double v0)
    : field_(std::move(field)), v0_(v0) {
  if (!(v0 > 0.0)) throw std::invalid_argument("VelocityProfile: v0 must be positive");
  if (!field_.has_d1() || !field_.has_d2()) {
    throw std::invalid_argument(
        "VelocityProfile: closed-form d1 and d2 are required (effective potentials need v_f'')");
  }
}

Superpotential::Superpotential(ScalarField field) : field_(std::move(field)) {
  if (!field_.has_d1()) {
    throw std::invalid_argument(
        "Superpotential: closed-form d1 is required (partners are W^2 +- v_f W')");
  }
}

void validate(const Ambiguity& a) {
  if (std::abs(a.eta + a.beta + a.gamma + 1.0) > 1e-12) {
    throw std::invalid_argument("Ambiguity: eta + beta + gamma must equal -1");
  }
}

void validate(const SystemParams& p) {
  if (p.m0 < 0.0) throw std::invalid_argument("SystemParams: m0 must be non-negative");
  if (!(p.v0 > 0.0)) throw std::invalid_argument("SystemParams: v0 must be positive");
  validate(p.ambiguity);
}

double rest_energy_sq(const SystemParams& p) { return p.m0 * p.m0 * p.v0 * p.v0 * p.v0 * p.v0; }

}  // namespace dlfv
