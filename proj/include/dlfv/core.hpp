#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace dlfv {

/// Closed real interval; endpoints may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x >= lo && x <= hi; }
  bool finite() const;
  double width() const { return hi - lo; }
};

Interval intersect(const Interval& a, const Interval& b);

enum class Component { plus, minus };
enum class Coordinate { x_space, y_space };

std::string to_string(Component c);
std::string to_string(Coordinate c);

/// Uniform 1-D grid with inclusive endpoints, node(0) == lo and node(n-1) == hi.
class Grid1D {
public:
  Grid1D() : Grid1D(0.0, 1.0, 3) {}
  Grid1D(double lo, double hi, int n);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int n() const { return n_; }
  double spacing() const { return spacing_; }
  double node(int i) const { return i == n_ - 1 ? hi_ : lo_ + i * spacing_; }
  std::vector<double> nodes() const;

private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  int n_ = 3;
  double spacing_ = 0.5;
};

/// Rejects n < 3 and degenerate intervals.
Grid1D make_grid(double lo, double hi, int n);

/// Real scalar field of one coordinate with optional closed-form derivatives.
///
/// Potentials, velocity profiles and superpotentials are all carried around
/// as ScalarFields so that every quantity entering an eigensolve stays
/// evaluable in closed form; discretization happens once, in the solver.
class ScalarField {
public:
  using Fn = std::function<double(double)>;

  ScalarField() = default;
  explicit ScalarField(Fn f, Interval domain = {});
  ScalarField(Fn f, Fn d1, Interval domain = {});
  ScalarField(Fn f, Fn d1, Fn d2, Interval domain = {});

  double operator()(double x) const { return f_(x); }
  bool has_d1() const { return static_cast<bool>(d1_); }
  bool has_d2() const { return static_cast<bool>(d2_); }
  double d1(double x) const;
  double d2(double x) const;
  const Interval& domain() const { return domain_; }

private:
  Fn f_;
  Fn d1_;
  Fn d2_;
  Interval domain_;
};

/// Values f(node_i) in node order. Throws std::domain_error, naming the
/// offending coordinate, if a node leaves the field's domain or the value is
/// not finite.
std::vector<double> sample_field(const ScalarField& f, const Grid1D& g);

/// Comparison of closed-form derivatives against centered differences at the
/// grid spacing and at half the spacing. Errors are relative, normalized by
/// 1 + |derivative|; the coarse/fine ratio is ~4 for a correct O(h^2) pair.
struct DerivativeReport {
  bool pass = false;
  double d1_err = 0.0;         // max relative mismatch at spacing h/2
  double d1_err_coarse = 0.0;  // same at spacing h
  double d1_ratio = 0.0;       // coarse/fine error ratio
  bool checked_d2 = false;
  double d2_err = 0.0;
  double d2_err_coarse = 0.0;
  double d2_ratio = 0.0;
};

DerivativeReport check_derivatives(const ScalarField& f, const Grid1D& g, double tol);

/// Position-dependent carrier velocity v_f(x). Strictly positive on its
/// domain; closed-form first and second derivatives are mandatory because
/// the effective potentials involve v_f'' and numerically differentiating a
/// profile twice would wreck eigenvalue accuracy.
class VelocityProfile {
public:
  VelocityProfile() = default;
  VelocityProfile(ScalarField field, double v0);

  const ScalarField& field() const { return field_; }
  double v0() const { return v0_; }
  double operator()(double x) const { return field_(x); }
  double d1(double x) const { return field_.d1(x); }
  double d2(double x) const { return field_.d2(x); }

private:
  ScalarField field_;
  double v0_ = 1.0;
};

/// Pseudoscalar potential W(x); doubles as the SUSY superpotential, so a
/// closed-form first derivative is required (the partners are W^2 +- v_f W').
class Superpotential {
public:
  Superpotential() = default;
  explicit Superpotential(ScalarField field);

  const ScalarField& field() const { return field_; }
  double operator()(double x) const { return field_(x); }
  double d1(double x) const { return field_.d1(x); }
  bool has_d2() const { return field_.has_d2(); }
  double d2(double x) const { return field_.d2(x); }

private:
  ScalarField field_;
};

/// von Roos kinetic-operator ordering parameters, constrained by
/// eta + beta + gamma = -1.
struct Ambiguity {
  double eta = 0.0;
  double beta = -1.0;
  double gamma = 0.0;
};

/// Throws std::invalid_argument when the ordering constraint is violated.
void validate(const Ambiguity& a);

struct SystemParams {
  double m0 = 0.0;                    // rest mass
  double v0 = 1.0;                    // reference velocity
  Ambiguity ambiguity{0.0, -1.0, 0.0};  // Ben Daniel-Duke by default
};

void validate(const SystemParams& p);

/// m0^2 v0^4, the constant separating eps from E^2.
double rest_energy_sq(const SystemParams& p);

/// Eigenvalues are stored in the shifted variable eps = E^2 - m0^2 v0^4;
/// recovering E = +-sqrt(eps + m0^2 v0^4) is presentation-layer work.
struct Spectrum {
  Component component = Component::plus;
  Coordinate coordinate = Coordinate::y_space;
  Grid1D grid;
  std::vector<double> eps;
  std::vector<double> eps_err;  // Richardson estimates; empty unless refined
  std::vector<std::vector<double>> states;  // sampled on grid, endpoints included
  std::vector<double> norms;                // L2 norms after normalization
  bool converged = true;
};

struct PartnerPotentials {
  ScalarField v_plus;   // the +v_f W' branch (upper-component equation)
  ScalarField v_minus;  // the -v_f W' branch
  Coordinate coordinate = Coordinate::y_space;
};

}  // namespace dlfv
