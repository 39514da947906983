#include "dlfv/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dlfv/analytic.hpp"
#include "dlfv/eigensolver.hpp"
#include "dlfv/potentials.hpp"
#include "dlfv/susy.hpp"
#include "dlfv/transform.hpp"

namespace dlfv {

namespace fs = std::filesystem;

namespace {

constexpr int kInitialNodes = 2001;
constexpr int kMaxNodesSpectrum = (1 << 20) + 1;
constexpr int kMaxNodesCompare = (1 << 15) + 1;

std::string sig15(double v) {
  char b[40];
  std::snprintf(b, sizeof(b), "%.15g", v);
  return b;
}

std::string hash_hex(std::uint64_t h) {
  char b[20];
  std::snprintf(b, sizeof(b), "%016llx", static_cast<unsigned long long>(h));
  return b;
}

bool has_format(const RunConfig& c, const std::string& f) {
  return std::find(c.formats.begin(), c.formats.end(), f) != c.formats.end();
}

std::vector<Component> components_of(const RunConfig& c) {
  switch (c.components) {
    case ComponentChoice::plus: return {Component::plus};
    case ComponentChoice::minus: return {Component::minus};
    default: return {Component::plus, Component::minus};
  }
}

struct Windows {
  Interval x, y;
};

Windows solve_windows(const Scenario& s, const CoordinateMap& map) {
  Windows w;
  w.x = s.x_solve;
  w.y = s.y_solve ? *s.y_solve : Interval{map.forward(w.x.lo), map.forward(w.x.hi)};
  return w;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

ScalarField branch(const PartnerPotentials& p, Component c) {
  return c == Component::plus ? p.v_plus : p.v_minus;
}

Spectrum solve_spectrum(const Scenario& s, const CoordinateMap& map, CoordinateChoice coord,
                        Component comp, int k, double tol, int init_n, int max_nodes) {
  const Windows w = solve_windows(s, map);
  Spectrum sp;
  if (coord == CoordinateChoice::y) {
    const ScalarField v = pull_potential(branch(partner_potentials_y(s), comp), map);
    const Grid1D g0(w.y.lo, w.y.hi, init_n);
    sp = refine([v](const Grid1D& g) { return discretize_y(v, g); }, g0, k, tol, max_nodes);
  } else if (coord == CoordinateChoice::x) {
    const ScalarField v = branch(partner_potentials_x(s), comp);
    const MassFunction m = mass_from_velocity(s.vf);
    const Grid1D g0(w.x.lo, w.x.hi, init_n);
    sp = refine([v, m](const Grid1D& g) { return discretize_x_pdm(v, m, g); }, g0, k, tol,
                max_nodes);
  } else {
    // unit-mass solve of the x-space potential; same stencil as the y form
    const ScalarField v = branch(partner_potentials_x(s), comp);
    const Grid1D g0(w.x.lo, w.x.hi, init_n);
    sp = refine([v](const Grid1D& g) { return discretize_y(v, g); }, g0, k, tol, max_nodes);
    sp.coordinate = Coordinate::x_space;
  }
  sp.component = comp;
  return sp;
}

/// Closed-form eps levels matching a given solve, when the solve's windows
/// actually converge to them; empty otherwise. x-space PDM solves run on
/// truncated windows whose spectra differ from the untruncated closed forms,
/// so only y-space solves (and the CPRS constant-mass reference) qualify.
std::vector<double> analytic_eps_for(const Scenario& s, CoordinateChoice coord, Component comp,
                                     int k) {
  std::vector<double> out;
  if (s.name == "free_particle" && coord == CoordinateChoice::y) {
    for (const auto& l : free_particle_levels(s.params.at("a"), s.params.at("omega0"), s.system, k))
      out.push_back(l.eps);
  } else if (s.name == "shifted_oscillator" && s.analytic_available &&
             coord == CoordinateChoice::y) {
    for (const auto& l : half_oscillator_levels(s.params.at("omega"), s.system, comp, k))
      out.push_back(l.eps_derived);
  } else if (s.name == "coulomb" && coord == CoordinateChoice::y) {
    for (const auto& l : coulomb_levels(s.params.at("l"), s.system, comp, k)) out.push_back(l.eps);
  } else if (s.name == "cprs" && coord == CoordinateChoice::x_constant_mass &&
             comp == Component::minus) {
    for (const auto& l : cprs_levels(k)) out.push_back(l.eps);
  }
  return out;
}

void write_state_files(const fs::path& dir, const Spectrum& sp) {
  const int n = sp.grid.n();
  const int stride = std::max(1, (n - 1) / 2000);
  for (size_t j = 0; j < sp.states.size(); ++j) {
    std::ostringstream out;
    out << "# " << to_string(sp.coordinate) << " phi_" << to_string(sp.component) << "_" << j
        << "\n";
    for (int i = 0; i < n; i += stride) {
      out << sig15(sp.grid.node(i)) << " " << sig15(sp.states[j][static_cast<size_t>(i)]) << "\n";
    }
    if ((n - 1) % stride != 0) {
      out << sig15(sp.grid.node(n - 1)) << " " << sig15(sp.states[j][static_cast<size_t>(n - 1)])
          << "\n";
    }
    write_text_file(dir / ("state_" + to_string(sp.component) + "_" + std::to_string(j) + ".dat"),
                    out.str());
  }
}

struct Row {
  std::string check;
  std::string component;
  int index = -1;
  double numeric = 0.0;
  double reference = 0.0;
  double diff = 0.0;
  double tol = 0.0;
  std::string status;  // PASS / FAIL / ERRATUM / INFO
  std::string note;
};

std::string row_line(const Row& r) {
  std::ostringstream os;
  os << "[" << r.status << "] " << r.check;
  if (!r.component.empty()) os << " " << r.component;
  if (r.index >= 0) os << " n=" << r.index;
  os << ": numeric=" << sig15(r.numeric) << " reference=" << sig15(r.reference)
     << " |diff|=" << sig15(r.diff) << " (tol " << sig15(r.tol) << ")";
  if (!r.note.empty()) os << " " << r.note;
  return os.str();
}

double max_err(const Spectrum& sp) {
  double m = 0.0;
  for (double e : sp.eps_err) m = std::max(m, e);
  return m;
}

}  // namespace

Scenario scenario_from_config(const RunConfig& c) {
  auto params = c.scenario_params;
  auto take = [&params](const char* key, double dflt) {
    auto it = params.find(key);
    if (it == params.end()) return dflt;
    const double v = it->second;
    params.erase(it);
    return v;
  };

  Scenario s;
  try {
    if (c.scenario == "free_particle") {
      s = make_free_particle(take("a", 1.0), take("omega0", 0.0));
    } else if (c.scenario == "shifted_oscillator") {
      s = make_shifted_oscillator(take("v0", 1.0), take("alpha", 1.0), take("a", 1.0),
                                  take("b", 0.0));
    } else if (c.scenario == "coulomb") {
      s = make_coulomb(take("v0", 1.0), take("alpha", 1.0), take("l", 2.0));
    } else if (c.scenario == "cprs") {
      s = make_cprs();
    } else {
      throw ConfigError("scenario.name", "unknown scenario '" + c.scenario + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("scenario", e.what());
  }
  if (!params.empty()) {
    throw ConfigError("scenario." + params.begin()->first,
                      "unknown parameter for scenario '" + c.scenario + "'");
  }

  s.system.m0 = c.m0;
  s.system.v0 = c.v0;
  s.system.ambiguity = c.ambiguity;
  try {
    validate(s.system);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("system", e.what());
  }

  if (c.x_lo) s.x_solve.lo = *c.x_lo;
  if (c.x_hi) s.x_solve.hi = *c.x_hi;
  if (!(s.x_solve.lo < s.x_solve.hi)) {
    throw ConfigError("solve.x_lo", "empty x window");
  }
  if (c.y_lo || c.y_hi) {
    if (!s.y_solve && !(c.y_lo && c.y_hi)) {
      throw ConfigError("solve.y_lo",
                        "scenario has no default y window; both y_lo and y_hi are required");
    }
    Interval y = s.y_solve.value_or(Interval{0.0, 1.0});
    if (c.y_lo) y.lo = *c.y_lo;
    if (c.y_hi) y.hi = *c.y_hi;
    if (!(y.lo < y.hi)) throw ConfigError("solve.y_lo", "empty y window");
    s.y_solve = y;
  }
  return s;
}

int cmd_spectrum(const RunConfig& c) {
  const Scenario s = scenario_from_config(c);
  const CoordinateMap map = build_map(s);
  fs::create_directories(c.out_dir);
  const double me2 = rest_energy_sq(s.system);

  std::ostringstream csv;
  csv << "# dirac-lfv spectrum " << kToolVersion << "\n";
  csv << "# scenario: " << s.name << "\n";
  csv << "# coordinate: " << to_string(c.coordinate) << "\n";
  csv << "# config_hash: " << hash_hex(config_hash(c)) << "\n";
  csv << "component,n,eps_numeric,eps_error_estimate,eps_analytic,abs_diff";
  if (me2 > 0.0) csv << ",E_plus_branch";
  csv << "\n";

  for (Component comp : components_of(c)) {
    Spectrum sp;
    try {
      sp = solve_spectrum(s, map, c.coordinate, comp, c.k, c.tol, kInitialNodes,
                          kMaxNodesSpectrum);
    } catch (const std::exception& e) {
      std::cerr << "spectrum: solver failure: " << e.what() << "\n";
      return kExitNumerical;
    }
    if (!sp.converged) {
      std::cerr << "spectrum: refinement hit the node cap before reaching tol = " << c.tol
                << "\n";
      return kExitNumerical;
    }
    const std::vector<double> ana = analytic_eps_for(s, c.coordinate, comp, c.k);
    for (int j = 0; j < c.k; ++j) {
      const double eps = sp.eps[static_cast<size_t>(j)];
      csv << to_string(comp) << "," << j << "," << sig15(eps) << ","
          << sig15(sp.eps_err[static_cast<size_t>(j)]) << ",";
      if (!ana.empty()) {
        csv << sig15(ana[static_cast<size_t>(j)]) << ","
            << sig15(std::abs(eps - ana[static_cast<size_t>(j)]));
      } else {
        csv << ",";
      }
      if (me2 > 0.0) {
        csv << ",";
        if (eps + me2 >= 0.0) csv << sig15(std::sqrt(eps + me2));
      }
      csv << "\n";
    }
    if (has_format(c, "dat")) write_state_files(c.out_dir, sp);
  }

  if (has_format(c, "csv")) write_text_file(fs::path(c.out_dir) / "spectrum.csv", csv.str());
  return kExitOk;
}

int cmd_compare(const RunConfig& c) {
  const Scenario s = scenario_from_config(c);
  const CoordinateMap map = build_map(s);
  fs::create_directories(c.out_dir);

  std::vector<Row> rows;
  const auto comps = components_of(c);

  try {
    // numeric vs closed-form levels
    if (s.name == "cprs") {
      const Spectrum cm = solve_spectrum(s, map, CoordinateChoice::x_constant_mass,
                                         Component::minus, c.k, c.tol, kInitialNodes,
                                         kMaxNodesCompare);
      const auto ana = analytic_eps_for(s, CoordinateChoice::x_constant_mass, Component::minus,
                                        c.k);
      for (int j = 0; j < c.k; ++j) {
        Row r;
        r.check = "analytic_constant_mass";
        r.component = "minus";
        r.index = j;
        r.numeric = cm.eps[static_cast<size_t>(j)];
        r.reference = ana[static_cast<size_t>(j)];
        r.diff = std::abs(r.numeric - r.reference);
        r.tol = std::max(c.tol, 10.0 * cm.eps_err[static_cast<size_t>(j)]);
        r.status = r.diff <= r.tol ? "PASS" : "FAIL";
        rows.push_back(r);
      }
    } else if (s.analytic_available) {
      for (Component comp : comps) {
        const Spectrum sp =
            solve_spectrum(s, map, CoordinateChoice::y, comp, c.k, c.tol, kInitialNodes,
                           kMaxNodesCompare);
        const auto ana = analytic_eps_for(s, CoordinateChoice::y, comp, c.k);
        for (int j = 0; j < c.k; ++j) {
          Row r;
          r.check = "analytic";
          r.component = to_string(comp);
          r.index = j;
          r.numeric = sp.eps[static_cast<size_t>(j)];
          r.reference = ana[static_cast<size_t>(j)];
          r.diff = std::abs(r.numeric - r.reference);
          r.tol = std::max(c.tol, 10.0 * sp.eps_err[static_cast<size_t>(j)]);
          r.status = r.diff <= r.tol ? "PASS" : "FAIL";
          rows.push_back(r);
        }
        if (s.name == "shifted_oscillator") {
          // quoted closed form vs the re-derived one; the numerics follow the
          // derived value, so a persistent gap is an erratum flag, not a failure
          const auto levels =
              half_oscillator_levels(s.params.at("omega"), s.system, comp, c.k);
          for (int j = 0; j < c.k; ++j) {
            const auto& l = levels[static_cast<size_t>(j)];
            Row r;
            r.check = "quoted_vs_derived";
            r.component = to_string(comp);
            r.index = j;
            r.numeric = l.eps_derived;
            r.reference = l.eps_quoted;
            r.diff = std::abs(l.eps_derived - l.eps_quoted);
            r.tol = std::max(c.tol, 10.0 * sp.eps_err[static_cast<size_t>(j)]);
            r.status = r.diff > r.tol ? "ERRATUM" : "INFO";
            if (r.status == "ERRATUM") {
              r.note = "(quoted spectrum is not reproducible from the stated potential)";
            }
            rows.push_back(r);
          }
        }
      }
    }

    // transform equivalence: PDM flux form in x against the mapped y form on
    // matched windows (both sides see the same truncated problem)
    {
      const Interval xw = s.x_solve;
      const Interval yw{map.forward(xw.lo), map.forward(xw.hi)};
      for (Component comp : comps) {
        const ScalarField vx = branch(partner_potentials_x(s), comp);
        const MassFunction m = mass_from_velocity(s.vf);
        const ScalarField vy = pull_potential(branch(partner_potentials_y(s), comp), map);
        const int keq = std::min(c.k, 4);
        const Spectrum spx =
            refine([vx, m](const Grid1D& g) { return discretize_x_pdm(vx, m, g); },
                   Grid1D(xw.lo, xw.hi, kInitialNodes), keq, c.tol, kMaxNodesCompare);
        const Spectrum spy = refine([vy](const Grid1D& g) { return discretize_y(vy, g); },
                                    Grid1D(yw.lo, yw.hi, kInitialNodes), keq, c.tol,
                                    kMaxNodesCompare);
        for (int j = 0; j < keq; ++j) {
          Row r;
          r.check = "pdm_equivalence";
          r.component = to_string(comp);
          r.index = j;
          r.numeric = spx.eps[static_cast<size_t>(j)];
          r.reference = spy.eps[static_cast<size_t>(j)];
          r.diff = std::abs(r.numeric - r.reference);
          r.tol = spx.eps_err[static_cast<size_t>(j)] + spy.eps_err[static_cast<size_t>(j)] +
                  1e-5;
          r.status = r.diff <= r.tol ? "PASS" : "FAIL";
          rows.push_back(r);
        }
      }
    }

    // SUSY partner pairing in y-space on the native windows
    {
      const Spectrum spp = solve_spectrum(s, map, CoordinateChoice::y, Component::plus, c.k,
                                          c.tol / 10.0, kInitialNodes, kMaxNodesCompare);
      const Spectrum spm = solve_spectrum(s, map, CoordinateChoice::y, Component::minus, c.k,
                                          c.tol / 10.0, kInitialNodes, kMaxNodesCompare);
      const double ptol = std::max(1e-10, 10.0 * (max_err(spp) + max_err(spm)));
      const PairingReport rep = check_partner_degeneracy(spp, spm, ptol, s.susy_shift);
      Row r;
      r.check = "susy_pairing";
      r.component = "both";
      r.numeric = static_cast<double>(rep.matched.size());
      r.reference = static_cast<double>(rep.matched.size() + rep.unpaired.size());
      r.diff = static_cast<double>(rep.unpaired.size());
      r.tol = 1.0;
      r.status = rep.pass ? "PASS" : "FAIL";
      std::ostringstream note;
      note << "(matched " << rep.matched.size() << ", unpaired " << rep.unpaired.size()
           << ", shift " << sig15(rep.shift_used) << ")";
      r.note = note.str();
      rows.push_back(r);

      if (s.name == "coulomb") {
        for (int n = 0; n + 1 < c.k; ++n) {
          Row rr;
          rr.check = "degeneracy_identity";
          rr.component = "plus[n+1] vs minus[n]";
          rr.index = n;
          rr.numeric = spp.eps[static_cast<size_t>(n + 1)];
          rr.reference = spm.eps[static_cast<size_t>(n)];
          rr.diff = std::abs(rr.numeric - rr.reference);
          rr.tol = std::max(c.tol, 10.0 * (spp.eps_err[static_cast<size_t>(n + 1)] +
                                           spm.eps_err[static_cast<size_t>(n)]));
          rr.status = rr.diff <= rr.tol ? "PASS" : "FAIL";
          rows.push_back(rr);
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "compare: solver failure: " << e.what() << "\n";
    return kExitNumerical;
  }

  int failed = 0, erratum = 0;
  std::ostringstream txt, csv;
  txt << "dirac-lfv compare " << kToolVersion << "\n";
  txt << "scenario: " << s.name << "\n";
  txt << "config_hash: " << hash_hex(config_hash(c)) << "\n\n";
  csv << "# dirac-lfv compare " << kToolVersion << "\n";
  csv << "# scenario: " << s.name << "\n";
  csv << "# config_hash: " << hash_hex(config_hash(c)) << "\n";
  csv << "check,component,n,numeric,reference,abs_diff,tol,status\n";
  for (const auto& r : rows) {
    txt << row_line(r) << "\n";
    csv << r.check << "," << r.component << "," << (r.index >= 0 ? std::to_string(r.index) : "")
        << "," << sig15(r.numeric) << "," << sig15(r.reference) << "," << sig15(r.diff) << ","
        << sig15(r.tol) << "," << r.status << "\n";
    if (r.status == "FAIL") {
      ++failed;
      std::cerr << row_line(r) << "\n";
    }
    if (r.status == "ERRATUM") ++erratum;
  }
  txt << "\nsummary: " << rows.size() << " checks, " << (rows.size() - failed) << " passed, "
      << failed << " failed, " << erratum << " erratum flags\n";

  write_text_file(fs::path(c.out_dir) / "compare_report.txt", txt.str());
  write_text_file(fs::path(c.out_dir) / "compare_report.csv", csv.str());
  std::cout << txt.str();
  return failed == 0 ? kExitOk : kExitNumerical;
}

int cmd_potential_scan(const RunConfig& c) {
  const Scenario s = scenario_from_config(c);
  const CoordinateMap map = build_map(s);
  fs::create_directories(c.out_dir);
  const Windows w = solve_windows(s, map);

  const PartnerPotentials px = partner_potentials_x(s);
  const PartnerPotentials py = partner_potentials_y(s);

  auto sample_to_file = [&](const ScalarField& f, const Interval& win, bool shrink,
                            const std::string& name) {
    constexpr int kSamples = 2001;
    const double pad = shrink ? 1e-6 * win.width() : 0.0;
    const Grid1D g(win.lo + pad, win.hi - pad, kSamples);
    std::ostringstream out;
    out << "# " << name << "\n";
    for (int i = 0; i < g.n(); ++i) {
      out << sig15(g.node(i)) << " " << sig15(f(g.node(i))) << "\n";
    }
    write_text_file(fs::path(c.out_dir) / (name + ".dat"), out.str());
  };

  try {
    if (has_format(c, "dat")) {
      sample_to_file(px.v_plus, w.x, false, "potential_plus_x");
      sample_to_file(px.v_minus, w.x, false, "potential_minus_x");
      // pulled fields are defined strictly inside the image
      sample_to_file(pull_potential(py.v_plus, map), w.y, true, "potential_plus_y");
      sample_to_file(pull_potential(py.v_minus, map), w.y, true, "potential_minus_y");
    }

    std::ostringstream ecsv;
    ecsv << "# dirac-lfv potential-scan " << kToolVersion << "\n";
    ecsv << "# config_hash: " << hash_hex(config_hash(c)) << "\n";
    ecsv << "branch,x,value,kind\n";
    for (Component comp : {Component::plus, Component::minus}) {
      const auto extrema = find_extrema(branch(px, comp), w.x);
      for (const auto& e : extrema) {
        ecsv << to_string(comp) << "," << sig15(e.x) << "," << sig15(e.value) << ","
             << to_string(e.kind) << "\n";
      }
    }
    write_text_file(fs::path(c.out_dir) / "extrema.csv", ecsv.str());
  } catch (const std::exception& e) {
    std::cerr << "potential-scan: " << e.what() << "\n";
    return kExitConfig;
  }

  if (has_format(c, "gnuplot")) {
    std::ostringstream gp;
    gp << "# dirac-lfv potential scan, two-panel layout\n";
    gp << "set terminal pngcairo size 1200,480\n";
    gp << "set output 'potentials.png'\n";
    gp << "set multiplot layout 1,2\n";
    gp << "set xlabel 'x'\n";
    gp << "set ylabel 'V_eff'\n";
    gp << "set title '" << s.name << " minus branch'\n";
    gp << "plot 'potential_minus_x.dat' using 1:2 with lines notitle\n";
    gp << "set title '" << s.name << " plus branch'\n";
    gp << "plot 'potential_plus_x.dat' using 1:2 with lines notitle\n";
    gp << "unset multiplot\n";
    write_text_file(fs::path(c.out_dir) / "potentials.gp", gp.str());
  }
  return kExitOk;
}

}  // namespace dlfv
