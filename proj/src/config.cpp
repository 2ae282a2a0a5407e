#include <fstream>
#include <sstream>

#include "aaad/runner.hpp"

namespace aaad {

SchemeKind parse_scheme(const std::string& name) {
  if (name == "cu2") return SchemeKind::CU2;
  if (name == "aaad2") return SchemeKind::AAAD2;
  if (name == "aweno5") return SchemeKind::AWENO5;
  if (name == "aaad5") return SchemeKind::AAAD5;
  throw ConfigError("UnknownScheme: " + name +
                    " (expected cu2, aaad2, aweno5, or aaad5)");
}

const char* scheme_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::CU2: return "cu2";
    case SchemeKind::AAAD2: return "aaad2";
    case SchemeKind::AWENO5: return "aweno5";
    default: return "aaad5";
  }
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("BadValue: " + key + "=" + v);
  }
  if (pos != v.size()) throw ConfigError("BadValue: " + key + "=" + v);
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long x;
  try {
    x = std::stol(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("BadValue: " + key + "=" + v);
  }
  if (pos != v.size()) throw ConfigError("BadValue: " + key + "=" + v);
  return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  throw ConfigError("BadValue: " + key + "=" + v);
}

std::vector<double> to_times(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("BadValue: " + key + "=" + v);
    out.push_back(to_double(key, item));
  }
  return out;
}

}  // namespace

RunConfig config_from_map(const std::map<std::string, std::string>& kv) {
  RunConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "problem") {
      cfg.problem = value;
    } else if (key == "scheme") {
      cfg.scheme = value;
    } else if (key == "nx") {
      cfg.nx = to_int(key, value);
    } else if (key == "ny") {
      cfg.ny = to_int(key, value);
    } else if (key == "c") {
      cfg.c = to_double(key, value);
    } else if (key == "theta") {
      cfg.theta = to_double(key, value);
    } else if (key == "cfl") {
      cfg.cfl = to_double(key, value);
    } else if (key == "eps0") {
      cfg.eps0 = to_double(key, value);
    } else if (key == "t_final_override") {
      cfg.t_final_override = to_double(key, value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else if (key == "snapshots") {
      cfg.snapshots = to_times(key, value);
    } else if (key == "accuracy_mode") {
      cfg.accuracy_mode = to_bool(key, value);
    } else if (key == "dt_cap_k") {
      cfg.dt_cap_k = to_double(key, value);
    } else if (key == "vtk") {
      cfg.vtk = to_bool(key, value);
    } else if (key == "full_state") {
      cfg.full_state = to_bool(key, value);
    } else if (key == "exec") {
      cfg.exec = value;
    } else if (key == "write_outputs") {
      cfg.write_outputs = to_bool(key, value);
    } else {
      throw ConfigError("UnknownKey: " + key);
    }
  }

  if (cfg.problem.empty()) throw ConfigError("MissingKey: problem");
  parse_scheme(cfg.scheme);
  if (cfg.nx < 0 || cfg.ny < 0) throw ConfigError("BadValue: mesh extents");
  if (cfg.nx > 0 && cfg.nx < 8) throw ConfigError("BadValue: nx below stencil width");
  if (!(cfg.cfl > 0.0) || cfg.cfl > 1.0)
    throw ConfigError("BadValue: cfl outside (0,1]");
  if (!(cfg.theta >= 1.0) || cfg.theta > 2.0)
    throw ConfigError("BadValue: theta outside [1,2]");
  if (!(cfg.eps0 > 0.0)) throw ConfigError("BadValue: eps0 must be positive");
  if (!(cfg.dt_cap_k > 0.0)) throw ConfigError("BadValue: dt_cap_k must be positive");
  if (cfg.t_final_override && !(*cfg.t_final_override >= 0.0))
    throw ConfigError("BadValue: t_final_override negative");
  if (cfg.exec != "omp" && cfg.exec != "serial")
    throw ConfigError("BadValue: exec must be omp or serial");
  for (double t : cfg.snapshots)
    if (!(t > 0.0)) throw ConfigError("BadValue: snapshot times must be positive");
  return cfg;
}

RunConfig parse_run_config(const std::string& path,
                           const std::map<std::string, std::string>& overrides) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("bad config line " + std::to_string(lineno) + " in " +
                        path + ": " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key at line " + std::to_string(lineno));
    kv[key] = value;  // last occurrence wins
  }
  for (const auto& [key, value] : overrides) kv[key] = value;
  return config_from_map(kv);
}

}  // namespace aaad
