#include "dlfv/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace dlfv {

MassFunction::MassFunction(ScalarField field, Origin origin)
    : field_(std::move(field)), origin_(origin) {
  if (!field_.has_d1() || !field_.has_d2()) {
    throw std::invalid_argument("MassFunction: closed-form d1 and d2 are required");
  }
}

PartnerPotentials partner_potentials_y(const Scenario& s) {
  const Superpotential w = s.w;
  const VelocityProfile vf = s.vf;
  Interval dom = intersect(w.field().domain(), vf.field().domain());

  auto value = [w, vf](double x, double sign) { return w(x) * w(x) + sign * vf(x) * w.d1(x); };
  PartnerPotentials out;
  out.coordinate = Coordinate::y_space;
  if (w.has_d2()) {
    auto deriv = [w, vf](double x, double sign) {
      return 2.0 * w(x) * w.d1(x) + sign * (vf.d1(x) * w.d1(x) + vf(x) * w.d2(x));
    };
    out.v_plus = ScalarField([value](double x) { return value(x, +1.0); },
                             [deriv](double x) { return deriv(x, +1.0); }, dom);
    out.v_minus = ScalarField([value](double x) { return value(x, -1.0); },
                              [deriv](double x) { return deriv(x, -1.0); }, dom);
  } else {
    out.v_plus = ScalarField([value](double x) { return value(x, +1.0); }, dom);
    out.v_minus = ScalarField([value](double x) { return value(x, -1.0); }, dom);
  }
  return out;
}

PartnerPotentials partner_potentials_x(const Scenario& s) {
  const Superpotential w = s.w;
  const VelocityProfile vf = s.vf;
  Interval dom = intersect(w.field().domain(), vf.field().domain());

  // W^2 +- v_f W' - v_f'^2/4 - v_f v_f''/2. The derivative of the correction
  // terms would need v_f''', which profiles do not carry, so these fields
  // expose values only; find_extrema falls back to a stencil for them.
  auto value = [w, vf](double x, double sign) {
    const double d1 = vf.d1(x);
    return w(x) * w(x) + sign * vf(x) * w.d1(x) - 0.25 * d1 * d1 - 0.5 * vf(x) * vf.d2(x);
  };
  PartnerPotentials out;
  out.coordinate = Coordinate::x_space;
  out.v_plus = ScalarField([value](double x) { return value(x, +1.0); }, dom);
  out.v_minus = ScalarField([value](double x) { return value(x, -1.0); }, dom);
  return out;
}

PartnerPotentials zeta_partner_potentials(const ScalarField& zeta, const VelocityProfile& vf) {
  if (!zeta.has_d1()) {
    throw std::invalid_argument("zeta_partner_potentials: zeta needs a closed-form d1");
  }
  const ScalarField z = zeta;
  const VelocityProfile v = vf;
  Interval dom = intersect(z.domain(), v.field().domain());

  PartnerPotentials out;
  out.coordinate = Coordinate::x_space;
  out.v_plus = ScalarField(
      [z, v](double x) {
        return z(x) * z(x) - v.d1(x) * z(x) + v(x) * z.d1(x) - v(x) * v.d2(x);
      },
      dom);
  out.v_minus = ScalarField(
      [z, v](double x) {
        // zeta^2 - d/dx (v_f zeta)
        return z(x) * z(x) - v.d1(x) * z(x) - v(x) * z.d1(x);
      },
      dom);
  return out;
}

ScalarField von_roos_effective_potential(const ScalarField& base, const MassFunction& m,
                                         const Ambiguity& ambiguity) {
  validate(ambiguity);
  const double c1 = 0.5 * (ambiguity.beta + 1.0);
  const double c2 = ambiguity.eta * (ambiguity.eta + ambiguity.beta + 1.0) + ambiguity.beta + 1.0;
  const ScalarField b = base;
  const MassFunction mm = m;
  Interval dom = intersect(b.domain(), mm.field().domain());

  return ScalarField(
      [b, mm, c1, c2](double x) {
        double v = b(x);
        const double mv = mm(x);
        if (c1 != 0.0) v += c1 * mm.d2(x) / (mv * mv);
        if (c2 != 0.0) {
          const double md1 = mm.d1(x);
          v -= c2 * md1 * md1 / (mv * mv * mv);
        }
        return v;
      },
      dom);
}

MassFunction mass_from_velocity(const VelocityProfile& vf) {
  const VelocityProfile v = vf;
  auto f = [v](double x) {
    const double w = v(x);
    return 1.0 / (w * w);
  };
  auto d1 = [v](double x) {
    const double w = v(x);
    return -2.0 * v.d1(x) / (w * w * w);
  };
  auto d2 = [v](double x) {
    const double w = v(x);
    const double wd1 = v.d1(x);
    return (6.0 * wd1 * wd1 - 2.0 * w * v.d2(x)) / (w * w * w * w);
  };
  return MassFunction(ScalarField(f, d1, d2, v.field().domain()), MassFunction::Origin::from_velocity);
}

MassFunction mustafa_mass(const Scenario& s) {
  validate(s.system);
  const double scale = s.system.m0 * s.system.v0 * s.system.v0;
  MassFunction base = mass_from_velocity(s.vf);
  const ScalarField f = base.field();
  return MassFunction(ScalarField([f, scale](double x) { return scale * f(x); },
                                  [f, scale](double x) { return scale * f.d1(x); },
                                  [f, scale](double x) { return scale * f.d2(x); },
                                  f.domain()),
                      MassFunction::Origin::mustafa);
}

}  // namespace dlfv
