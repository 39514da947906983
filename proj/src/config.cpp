#include "dlfv/config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dlfv {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& field, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || (end && *end != '\0')) {
    throw ConfigError(field, "expected a number, got '" + value + "'");
  }
  return v;
}

int parse_int(const std::string& field, const std::string& value) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || (end && *end != '\0')) {
    throw ConfigError(field, "expected an integer, got '" + value + "'");
  }
  return static_cast<int>(v);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(ComponentChoice c) {
  switch (c) {
    case ComponentChoice::plus: return "plus";
    case ComponentChoice::minus: return "minus";
    default: return "both";
  }
}

std::string to_string(CoordinateChoice c) {
  switch (c) {
    case CoordinateChoice::y: return "y";
    case CoordinateChoice::x: return "x";
    default: return "x_constant_mass";
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  c.scenario_params.clear();
  c.formats.clear();

  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  bool saw_formats = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw ConfigError("line " + std::to_string(lineno), "malformed section header: " + t);
      }
      section = trim(t.substr(1, t.size() - 2));
      if (section != "scenario" && section != "system" && section != "solve" &&
          section != "output") {
        throw ConfigError(section, "unknown section");
      }
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno), "expected 'key = value', got: " + t);
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section.empty()) {
      throw ConfigError(key, "key outside any [section]");
    }
    const std::string field = section + "." + key;

    if (section == "scenario") {
      if (key == "name") {
        c.scenario = value;
      } else {
        c.scenario_params[key] = parse_number(field, value);
      }
    } else if (section == "system") {
      if (key == "m0") c.m0 = parse_number(field, value);
      else if (key == "v0") c.v0 = parse_number(field, value);
      else if (key == "eta") c.ambiguity.eta = parse_number(field, value);
      else if (key == "beta") c.ambiguity.beta = parse_number(field, value);
      else if (key == "gamma") c.ambiguity.gamma = parse_number(field, value);
      else throw ConfigError(field, "unknown key");
    } else if (section == "solve") {
      if (key == "components") {
        if (value == "plus") c.components = ComponentChoice::plus;
        else if (value == "minus") c.components = ComponentChoice::minus;
        else if (value == "both") c.components = ComponentChoice::both;
        else throw ConfigError(field, "expected plus|minus|both, got '" + value + "'");
      } else if (key == "k") {
        c.k = parse_int(field, value);
        if (c.k < 1) throw ConfigError(field, "k must be at least 1");
      } else if (key == "tol") {
        c.tol = parse_number(field, value);
        if (!(c.tol > 0)) throw ConfigError(field, "tol must be positive");
      } else if (key == "coordinate") {
        if (value == "y") c.coordinate = CoordinateChoice::y;
        else if (value == "x") c.coordinate = CoordinateChoice::x;
        else if (value == "x_constant_mass") c.coordinate = CoordinateChoice::x_constant_mass;
        else throw ConfigError(field, "expected y|x|x_constant_mass, got '" + value + "'");
      } else if (key == "x_lo") c.x_lo = parse_number(field, value);
      else if (key == "x_hi") c.x_hi = parse_number(field, value);
      else if (key == "y_lo") c.y_lo = parse_number(field, value);
      else if (key == "y_hi") c.y_hi = parse_number(field, value);
      else throw ConfigError(field, "unknown key");
    } else {  // output
      if (key == "dir") {
        c.out_dir = value;
      } else if (key == "formats") {
        saw_formats = true;
        std::string item;
        std::istringstream fs(value);
        while (std::getline(fs, item, ',')) {
          item = trim(item);
          if (item.empty()) continue;
          if (item != "csv" && item != "dat" && item != "gnuplot") {
            throw ConfigError(field, "unknown format '" + item + "'");
          }
          c.formats.push_back(item);
        }
      } else {
        throw ConfigError(field, "unknown key");
      }
    }
  }
  if (!saw_formats) c.formats = {"csv", "dat", "gnuplot"};
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "[scenario]\n";
  out << "name = " << c.scenario << "\n";
  for (const auto& [k, v] : c.scenario_params) out << k << " = " << num(v) << "\n";
  out << "\n[system]\n";
  out << "m0 = " << num(c.m0) << "\n";
  out << "v0 = " << num(c.v0) << "\n";
  out << "eta = " << num(c.ambiguity.eta) << "\n";
  out << "beta = " << num(c.ambiguity.beta) << "\n";
  out << "gamma = " << num(c.ambiguity.gamma) << "\n";
  out << "\n[solve]\n";
  out << "components = " << to_string(c.components) << "\n";
  out << "k = " << c.k << "\n";
  out << "tol = " << num(c.tol) << "\n";
  out << "coordinate = " << to_string(c.coordinate) << "\n";
  if (c.x_lo) out << "x_lo = " << num(*c.x_lo) << "\n";
  if (c.x_hi) out << "x_hi = " << num(*c.x_hi) << "\n";
  if (c.y_lo) out << "y_lo = " << num(*c.y_lo) << "\n";
  if (c.y_hi) out << "y_hi = " << num(*c.y_hi) << "\n";
  out << "\n[output]\n";
  out << "dir = " << c.out_dir << "\n";
  out << "formats = ";
  for (size_t i = 0; i < c.formats.size(); ++i) {
    if (i) out << ",";
    out << c.formats[i];
  }
  out << "\n";
  return out.str();
}

std::uint64_t config_hash(const RunConfig& c) {
  const std::string s = serialize_config(c);
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace dlfv
