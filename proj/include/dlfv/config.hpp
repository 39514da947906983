#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlfv/core.hpp"

namespace dlfv {

/// Configuration problem; `field` names the offending section.key.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error("config error [" + field + "]: " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

enum class ComponentChoice { plus, minus, both };

/// Which second-order form a spectrum run discretizes.
enum class CoordinateChoice {
  y,                // -d2/dy2 + V(y), constant mass in the mapped coordinate
  x,                // -d/dx (1/M) d/dx + V_eff(x), the PDM flux form
  x_constant_mass,  // -d2/dx2 + V_eff(x), unit mass (the CPRS reference solve)
};

struct RunConfig {
  std::string scenario = "free_particle";
  std::map<std::string, double> scenario_params;
  double m0 = 0.0;
  double v0 = 1.0;
  Ambiguity ambiguity{0.0, -1.0, 0.0};
  ComponentChoice components = ComponentChoice::both;
  int k = 4;
  double tol = 1e-6;
  CoordinateChoice coordinate = CoordinateChoice::y;
  std::optional<double> x_lo, x_hi, y_lo, y_hi;  // domain overrides
  std::string out_dir = ".";
  std::vector<std::string> formats = {"csv", "dat", "gnuplot"};

  bool operator==(const RunConfig&) const = default;
};

/// Parses the flat INI-style grammar documented in the README: [section]
/// headers, key = value lines, # or ; comments, blanks ignored. Unknown
/// sections or keys are errors.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::filesystem::path& path);

/// Canonical serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& c);

/// FNV-1a 64-bit hash of the canonical serialization, for output metadata.
std::uint64_t config_hash(const RunConfig& c);

std::string to_string(ComponentChoice c);
std::string to_string(CoordinateChoice c);

}  // namespace dlfv
