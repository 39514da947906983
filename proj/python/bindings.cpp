#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dlfv/analytic.hpp"
#include "dlfv/catalog.hpp"
#include "dlfv/commands.hpp"
#include "dlfv/config.hpp"
#include "dlfv/core.hpp"
#include "dlfv/eigensolver.hpp"
#include "dlfv/potentials.hpp"
#include "dlfv/susy.hpp"
#include "dlfv/transform.hpp"

namespace py = pybind11;
using namespace dlfv;

namespace {

ScalarField make_field(std::function<double(double)> f, std::function<double(double)> d1,
                       std::function<double(double)> d2, double lo, double hi) {
  Interval dom{lo, hi};
  if (d1 && d2) return ScalarField(std::move(f), std::move(d1), std::move(d2), dom);
  if (d1) return ScalarField(std::move(f), std::move(d1), dom);
  return ScalarField(std::move(f), dom);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirac systems with a local Fermi velocity: potentials, maps, eigensolver";

  py::class_<Interval>(m, "Interval")
      .def(py::init<>())
      .def(py::init<double, double>())
      .def_readwrite("lo", &Interval::lo)
      .def_readwrite("hi", &Interval::hi)
      .def("contains", &Interval::contains);

  py::enum_<Component>(m, "Component")
      .value("plus", Component::plus)
      .value("minus", Component::minus);
  py::enum_<Coordinate>(m, "Coordinate")
      .value("x_space", Coordinate::x_space)
      .value("y_space", Coordinate::y_space);

  py::class_<Grid1D>(m, "Grid1D")
      .def(py::init<double, double, int>(), py::arg("lo"), py::arg("hi"), py::arg("n"))
      .def_property_readonly("lo", &Grid1D::lo)
      .def_property_readonly("hi", &Grid1D::hi)
      .def_property_readonly("n", &Grid1D::n)
      .def_property_readonly("spacing", &Grid1D::spacing)
      .def("node", &Grid1D::node)
      .def("nodes", &Grid1D::nodes);
  m.def("make_grid", &make_grid);

  py::class_<ScalarField>(m, "ScalarField")
      .def(py::init(&make_field), py::arg("f"), py::arg("d1") = nullptr, py::arg("d2") = nullptr,
           py::arg("lo") = -std::numeric_limits<double>::infinity(),
           py::arg("hi") = std::numeric_limits<double>::infinity())
      .def("__call__", &ScalarField::operator())
      .def("d1", &ScalarField::d1)
      .def("d2", &ScalarField::d2)
      .def_property_readonly("has_d1", &ScalarField::has_d1)
      .def_property_readonly("has_d2", &ScalarField::has_d2)
      .def_property_readonly("domain", &ScalarField::domain);
  m.def("sample_field", &sample_field);

  py::class_<DerivativeReport>(m, "DerivativeReport")
      .def_readonly("pass_", &DerivativeReport::pass)
      .def_readonly("d1_err", &DerivativeReport::d1_err)
      .def_readonly("d1_err_coarse", &DerivativeReport::d1_err_coarse)
      .def_readonly("d1_ratio", &DerivativeReport::d1_ratio)
      .def_readonly("checked_d2", &DerivativeReport::checked_d2)
      .def_readonly("d2_err", &DerivativeReport::d2_err)
      .def_readonly("d2_ratio", &DerivativeReport::d2_ratio);
  m.def("check_derivatives", &check_derivatives);

  py::class_<VelocityProfile>(m, "VelocityProfile")
      .def(py::init<ScalarField, double>(), py::arg("field"), py::arg("v0"))
      .def("__call__", &VelocityProfile::operator())
      .def("d1", &VelocityProfile::d1)
      .def("d2", &VelocityProfile::d2)
      .def_property_readonly("field", &VelocityProfile::field)
      .def_property_readonly("v0", &VelocityProfile::v0);

  py::class_<Superpotential>(m, "Superpotential")
      .def(py::init<ScalarField>(), py::arg("field"))
      .def("__call__", &Superpotential::operator())
      .def("d1", &Superpotential::d1)
      .def_property_readonly("field", &Superpotential::field);

  py::class_<Ambiguity>(m, "Ambiguity")
      .def(py::init<>())
      .def(py::init<double, double, double>(), py::arg("eta"), py::arg("beta"), py::arg("gamma"))
      .def_readwrite("eta", &Ambiguity::eta)
      .def_readwrite("beta", &Ambiguity::beta)
      .def_readwrite("gamma", &Ambiguity::gamma);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("m0", &SystemParams::m0)
      .def_readwrite("v0", &SystemParams::v0)
      .def_readwrite("ambiguity", &SystemParams::ambiguity);
  m.def("rest_energy_sq", &rest_energy_sq);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("component", &Spectrum::component)
      .def_readonly("coordinate", &Spectrum::coordinate)
      .def_readonly("grid", &Spectrum::grid)
      .def_readonly("eps", &Spectrum::eps)
      .def_readonly("eps_err", &Spectrum::eps_err)
      .def_readonly("states", &Spectrum::states)
      .def_readonly("norms", &Spectrum::norms)
      .def_readonly("converged", &Spectrum::converged);

  py::class_<PartnerPotentials>(m, "PartnerPotentials")
      .def_readonly("v_plus", &PartnerPotentials::v_plus)
      .def_readonly("v_minus", &PartnerPotentials::v_minus)
      .def_readonly("coordinate", &PartnerPotentials::coordinate);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("w", &Scenario::w)
      .def_readonly("vf", &Scenario::vf)
      .def_readwrite("system", &Scenario::system)
      .def_readonly("params", &Scenario::params)
      .def_readonly("analytic_available", &Scenario::analytic_available)
      .def_readwrite("x_solve", &Scenario::x_solve)
      .def_readwrite("y_solve", &Scenario::y_solve)
      .def_readonly("susy_shift", &Scenario::susy_shift);

  m.def("make_free_particle", &make_free_particle, py::arg("a"), py::arg("omega0"));
  m.def("make_shifted_oscillator", &make_shifted_oscillator, py::arg("v0"), py::arg("alpha"),
        py::arg("a"), py::arg("b"));
  m.def("make_coulomb", &make_coulomb, py::arg("v0"), py::arg("alpha"), py::arg("l"));
  m.def("make_cprs", &make_cprs);
  m.def("make_custom", &make_custom, py::arg("w"), py::arg("vf"), py::arg("system"),
        py::arg("x_domain"), py::arg("name") = "custom");
  m.def("zeta_to_superpotential", &zeta_to_superpotential);

  py::class_<MassFunction> mass(m, "MassFunction");
  py::enum_<MassFunction::Origin>(mass, "Origin")
      .value("from_velocity", MassFunction::Origin::from_velocity)
      .value("mustafa", MassFunction::Origin::mustafa);
  mass.def("__call__", &MassFunction::operator())
      .def("d1", &MassFunction::d1)
      .def("d2", &MassFunction::d2)
      .def_property_readonly("field", &MassFunction::field)
      .def_property_readonly("origin", &MassFunction::origin);

  m.def("partner_potentials_y", &partner_potentials_y);
  m.def("partner_potentials_x", &partner_potentials_x);
  m.def("zeta_partner_potentials", &zeta_partner_potentials);
  m.def("von_roos_effective_potential", &von_roos_effective_potential);
  m.def("mass_from_velocity", &mass_from_velocity);
  m.def("mustafa_mass", &mustafa_mass);

  py::class_<CoordinateMap>(m, "CoordinateMap")
      .def("forward", &CoordinateMap::forward)
      .def("inverse", &CoordinateMap::inverse)
      .def_property_readonly("y_lo", &CoordinateMap::y_lo)
      .def_property_readonly("y_hi", &CoordinateMap::y_hi)
      .def_property_readonly("closed_form", &CoordinateMap::closed_form);
  m.def("build_map", &build_map, py::arg("scenario"), py::arg("anchor_x") = 0.0);
  m.def("build_map_quadrature", &build_map_quadrature, py::arg("vf"), py::arg("window"),
        py::arg("anchor_x") = 0.0, py::arg("anchor_y") = 0.0);
  m.def("push_wavefunction", &push_wavefunction);
  m.def("pull_potential", &pull_potential);

  m.def("hermite", &hermite);
  m.def("kummer_m", &kummer_m);
  m.def("whittaker_m", &whittaker_m);

  py::class_<QuantizationInput>(m, "QuantizationInput")
      .def(py::init<>())
      .def_readwrite("p", &QuantizationInput::p)
      .def_readwrite("q", &QuantizationInput::q)
      .def_readwrite("r", &QuantizationInput::r);
  py::class_<QuantizedLevel>(m, "QuantizedLevel")
      .def_readonly("n", &QuantizedLevel::n)
      .def_readonly("p", &QuantizedLevel::p);
  m.def("solve_quantization", &solve_quantization, py::arg("input"), py::arg("n_max") = 16);

  py::class_<AnalyticLevel>(m, "AnalyticLevel")
      .def_readonly("n", &AnalyticLevel::n)
      .def_readonly("eps", &AnalyticLevel::eps)
      .def_readonly("component", &AnalyticLevel::component)
      .def_readonly("eigenfunction", &AnalyticLevel::eigenfunction)
      .def_readonly("damping_window_ok", &AnalyticLevel::damping_window_ok);
  py::class_<HalfOscillatorLevel>(m, "HalfOscillatorLevel")
      .def_readonly("n", &HalfOscillatorLevel::n)
      .def_readonly("component", &HalfOscillatorLevel::component)
      .def_readonly("eps_quoted", &HalfOscillatorLevel::eps_quoted)
      .def_readonly("eps_derived", &HalfOscillatorLevel::eps_derived)
      .def_readonly("differs", &HalfOscillatorLevel::differs)
      .def_readonly("eigenfunction", &HalfOscillatorLevel::eigenfunction);
  m.def("free_particle_levels", &free_particle_levels);
  m.def("half_oscillator_levels", &half_oscillator_levels);
  m.def("coulomb_levels", &coulomb_levels);
  m.def("cprs_levels", &cprs_levels);

  py::class_<DiscretizedOperator> dop(m, "DiscretizedOperator");
  py::enum_<DiscretizedOperator::Form>(dop, "Form")
      .value("constant_mass_y", DiscretizedOperator::Form::constant_mass_y)
      .value("pdm_flux_x", DiscretizedOperator::Form::pdm_flux_x);
  dop.def_readonly("diag", &DiscretizedOperator::diag)
      .def_readonly("offdiag", &DiscretizedOperator::offdiag)
      .def_readonly("grid", &DiscretizedOperator::grid)
      .def_readonly("form", &DiscretizedOperator::form);

  m.def("discretize_y", &discretize_y);
  m.def("discretize_x_pdm", &discretize_x_pdm);
  m.def("default_seed", &default_seed);
  m.def("lowest_eigenpairs", &lowest_eigenpairs, py::arg("op"), py::arg("k"),
        py::arg("seed") = default_seed());
  m.def(
      "refine",
      [](const std::function<DiscretizedOperator(const Grid1D&)>& build, const Grid1D& initial,
         int k, double target_tol, int max_nodes) {
        return refine(build, initial, k, target_tol, max_nodes);
      },
      py::arg("build"), py::arg("initial"), py::arg("k"), py::arg("target_tol"),
      py::arg("max_nodes") = (1 << 20) + 1);

  py::class_<Extremum> ext(m, "Extremum");
  py::enum_<Extremum::Kind>(ext, "Kind")
      .value("minimum", Extremum::Kind::minimum)
      .value("maximum", Extremum::Kind::maximum)
      .value("inflection", Extremum::Kind::inflection);
  ext.def_readonly("x", &Extremum::x)
      .def_readonly("value", &Extremum::value)
      .def_readonly("kind", &Extremum::kind);
  m.def("find_extrema", &find_extrema);

  py::class_<PairingReport> pr(m, "PairingReport");
  py::class_<PairingReport::Match>(pr, "Match")
      .def_readonly("plus_index", &PairingReport::Match::plus_index)
      .def_readonly("minus_index", &PairingReport::Match::minus_index)
      .def_readonly("abs_diff", &PairingReport::Match::abs_diff);
  py::class_<PairingReport::Unpaired>(pr, "Unpaired")
      .def_readonly("component", &PairingReport::Unpaired::component)
      .def_readonly("index", &PairingReport::Unpaired::index)
      .def_readonly("eps", &PairingReport::Unpaired::eps);
  pr.def_readonly("matched", &PairingReport::matched)
      .def_readonly("unpaired", &PairingReport::unpaired)
      .def_readonly("tolerance_used", &PairingReport::tolerance_used)
      .def_readonly("shift_used", &PairingReport::shift_used)
      .def_readonly("pass_", &PairingReport::pass);
  m.def("check_partner_degeneracy", &check_partner_degeneracy, py::arg("plus"), py::arg("minus"),
        py::arg("tol"), py::arg("shift") = 0.0);

  py::enum_<IntertwineDirection>(m, "IntertwineDirection")
      .value("minus_to_plus", IntertwineDirection::minus_to_plus)
      .value("plus_to_minus", IntertwineDirection::plus_to_minus);
  m.def("apply_intertwiner", &apply_intertwiner);

  py::class_<IntertwiningReport> ir(m, "IntertwiningReport");
  py::class_<IntertwiningReport::StateResult>(ir, "StateResult")
      .def_readonly("index", &IntertwiningReport::StateResult::index)
      .def_readonly("eps", &IntertwiningReport::StateResult::eps)
      .def_readonly("annihilated", &IntertwiningReport::StateResult::annihilated)
      .def_readonly("residual", &IntertwiningReport::StateResult::residual)
      .def_readonly("image_norm_ratio", &IntertwiningReport::StateResult::image_norm_ratio);
  ir.def_readonly("states", &IntertwiningReport::states)
      .def_readonly("tol", &IntertwiningReport::tol)
      .def_readonly("pass_", &IntertwiningReport::pass);
  m.def("check_intertwining", &check_intertwining, py::arg("scenario"), py::arg("n_states"),
        py::arg("tol"), py::arg("grid_n") = 8001);
}
