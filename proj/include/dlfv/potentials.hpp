#pragma once

#include "dlfv/catalog.hpp"
#include "dlfv/core.hpp"

namespace dlfv {

/// Position-dependent mass with closed-form derivatives.
class MassFunction {
public:
  enum class Origin { from_velocity, mustafa };

  MassFunction() = default;
  MassFunction(ScalarField field, Origin origin);

  const ScalarField& field() const { return field_; }
  Origin origin() const { return origin_; }
  double operator()(double x) const { return field_(x); }
  double d1(double x) const { return field_.d1(x); }
  double d2(double x) const { return field_.d2(x); }

private:
  ScalarField field_;
  Origin origin_ = Origin::from_velocity;
};

/// SUSY partners V+- = W^2 +- v_f W', tagged y_space. The fields are
/// functions of x; composing with x(y) is the transform module's job.
PartnerPotentials partner_potentials_y(const Scenario& s);

/// Effective x-space partners V+- = W^2 +- v_f W' - v_f'^2/4 - v_f v_f''/2,
/// the potentials of the uncoupled second-order equations in x.
PartnerPotentials partner_potentials_x(const Scenario& s);

/// zeta-form x-space partners:
///   V+ = zeta^2 - v_f' zeta + v_f zeta' - v_f v_f''
///   V- = zeta^2 - d/dx (v_f zeta)
/// Algebraically identical to partner_potentials_x with W = zeta - v_f'/2.
PartnerPotentials zeta_partner_potentials(const ScalarField& zeta, const VelocityProfile& vf);

/// V_eff = base + (beta+1)/2 * M''/M^2 - [eta(eta+beta+1)+beta+1] * M'^2/M^3.
/// Ben Daniel-Duke ordering (0,-1,0) returns the base bit-for-bit; zero
/// coefficients skip their terms entirely.
ScalarField von_roos_effective_potential(const ScalarField& base, const MassFunction& m,
                                         const Ambiguity& ambiguity);

/// M = 1/v_f^2 with M' = -2 v_f'/v_f^3 and M'' = (6 v_f'^2 - 2 v_f v_f'')/v_f^4.
MassFunction mass_from_velocity(const VelocityProfile& vf);

/// Carrier mass from the invariant m(x) v_f^2(x) = m0 v0^2. Identically zero
/// for massless carriers (m0 = 0).
MassFunction mustafa_mass(const Scenario& s);

}  // namespace dlfv
