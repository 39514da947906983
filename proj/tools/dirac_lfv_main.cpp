#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "dlfv/commands.hpp"
#include "dlfv/config.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::optional<int> k;
  std::optional<double> tol;
};

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--config", o.config_path, "run configuration file")->required();
  sub->add_option("--out", o.out_dir, "output directory (overrides [output] dir)");
  sub->add_option("--k", o.k, "number of eigenvalues (overrides [solve] k)");
  sub->add_option("--tol", o.tol, "target tolerance (overrides [solve] tol)");
}

dlfv::RunConfig load(const CommonOpts& o) {
  dlfv::RunConfig c = dlfv::load_config(o.config_path);
  if (!o.out_dir.empty()) c.out_dir = o.out_dir;
  if (o.k) c.k = *o.k;
  if (o.tol) c.tol = *o.tol;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dirac-lfv: solvable (1+1)-dimensional Dirac systems with a local Fermi velocity"};
  app.require_subcommand(1);

  CommonOpts so, co, po;
  CLI::App* spectrum = app.add_subcommand("spectrum", "solve and export eigenvalues/states");
  add_common(spectrum, so);
  CLI::App* compare = app.add_subcommand("compare", "analytic vs numeric comparison report");
  add_common(compare, co);
  CLI::App* scan = app.add_subcommand("potential-scan", "export potential samples and extrema");
  add_common(scan, po);

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) return dlfv::cmd_spectrum(load(so));
    if (compare->parsed()) return dlfv::cmd_compare(load(co));
    if (scan->parsed()) return dlfv::cmd_potential_scan(load(po));
  } catch (const dlfv::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return dlfv::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dlfv::kExitNumerical;
  }
  return dlfv::kExitConfig;
}
