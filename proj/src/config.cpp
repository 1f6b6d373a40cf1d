#include "vloc/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "vloc/presets.hpp"

namespace vloc {

namespace {

const char* const kKnownKeys[] = {
    "preset", "gamma1", "gamma2", "omega_p", "delta_p", "delta_c", "theta",
    "omega0", "kappa1", "kappa2", "delta_phase", "eta_phase",
    "x_min", "x_max", "y_min", "y_max", "nx", "ny", "emit",
};

const char* const kKnownOutputs[] = {"csv", "heatmap", "peaks", "audit"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool known_key(const std::string& key) {
  for (const char* k : kKnownKeys)
    if (key == k) return true;
  return false;
}

// Plain double, or a multiple of pi written as `<number>pi` / `pi`.
double parse_number(const std::string& value, int line) {
  std::string body = value;
  double factor = 1.0;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    factor = M_PI;
    body = trim(body.substr(0, body.size() - 2));
    if (body.empty()) return factor;  // bare `pi`
  }
  char* end = nullptr;
  const double x = std::strtod(body.c_str(), &end);
  if (end == body.c_str() || *end != '\0')
    throw ParseError(line, "expected a number, got '" + value + "'");
  return x * factor;
}

int parse_int(const std::string& value, int line) {
  char* end = nullptr;
  const long x = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    throw ParseError(line, "expected an integer, got '" + value + "'");
  return static_cast<int>(x);
}

std::vector<std::string> parse_outputs(const std::string& value, int line) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const bool ok = std::any_of(std::begin(kKnownOutputs), std::end(kKnownOutputs),
                                [&](const char* k) { return item == k; });
    if (!ok) throw ParseError(line, "unknown output kind '" + item + "'");
    out.push_back(item);
  }
  return out;
}

void apply_key(RunConfig& c, const std::string& key, const std::string& value,
               int line) {
  if (key == "gamma1") c.base.gamma1 = parse_number(value, line);
  else if (key == "gamma2") c.base.gamma2 = parse_number(value, line);
  else if (key == "omega_p") c.base.omega_p = parse_number(value, line);
  else if (key == "delta_p") c.base.delta_p = parse_number(value, line);
  else if (key == "delta_c") c.base.delta_c = parse_number(value, line);
  else if (key == "theta") c.base.theta = parse_number(value, line);
  else if (key == "omega0") c.wave.omega0 = parse_number(value, line);
  else if (key == "kappa1") c.wave.kappa1 = parse_number(value, line);
  else if (key == "kappa2") c.wave.kappa2 = parse_number(value, line);
  else if (key == "delta_phase") c.wave.delta_phase = parse_number(value, line);
  else if (key == "eta_phase") c.wave.eta_phase = parse_number(value, line);
  else if (key == "x_min") c.grid.x_min = parse_number(value, line);
  else if (key == "x_max") c.grid.x_max = parse_number(value, line);
  else if (key == "y_min") c.grid.y_min = parse_number(value, line);
  else if (key == "y_max") c.grid.y_max = parse_number(value, line);
  else if (key == "nx") c.grid.nx = parse_int(value, line);
  else if (key == "ny") c.grid.ny = parse_int(value, line);
  else if (key == "emit") c.outputs = parse_outputs(value, line);
}

}  // namespace

void RunConfig::validate() const {
  base.validate();
  wave.validate();
  grid.validate();
  for (const auto& o : outputs) {
    const bool ok = std::any_of(std::begin(kKnownOutputs), std::end(kKnownOutputs),
                                [&](const char* k) { return o == k; });
    if (!ok) throw RangeError("unknown output kind '" + o + "'");
  }
  if (!preset.empty() && !find_preset(preset))
    throw RangeError("unknown preset '" + preset + "'");
}

RunConfig parse_config(const std::string& text) {
  struct Entry {
    std::string key, value;
    int line;
  };
  std::vector<Entry> entries;

  std::stringstream ss(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected `key = value`");
    const std::string key = trim(raw.substr(0, eq));
    const std::string value = trim(raw.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (!known_key(key)) throw UnknownKey(line_no, key);
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
    entries.push_back({key, value, line_no});
  }

  RunConfig c;
  // Preset first, field overrides afterwards, independent of line order.
  for (const auto& e : entries) {
    if (e.key != "preset") continue;
    const auto p = find_preset(e.value);
    if (!p) throw ParseError(e.line, "unknown preset '" + e.value + "'");
    c.preset = e.value;
    c.base = p->base;
    c.wave = p->wave;
  }
  for (const auto& e : entries)
    if (e.key != "preset") apply_key(c, e.key, e.value, e.line);

  c.validate();
  return c;
}

std::string render_config(const RunConfig& config) {
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  std::ostringstream out;
  if (!config.preset.empty()) out << "# resolved from preset " << config.preset << "\n";
  out << "gamma1 = " << num(config.base.gamma1) << "\n";
  out << "gamma2 = " << num(config.base.gamma2) << "\n";
  out << "omega_p = " << num(config.base.omega_p) << "\n";
  out << "delta_p = " << num(config.base.delta_p) << "\n";
  out << "delta_c = " << num(config.base.delta_c) << "\n";
  out << "theta = " << num(config.base.theta) << "\n";
  out << "omega0 = " << num(config.wave.omega0) << "\n";
  out << "kappa1 = " << num(config.wave.kappa1) << "\n";
  out << "kappa2 = " << num(config.wave.kappa2) << "\n";
  out << "delta_phase = " << num(config.wave.delta_phase) << "\n";
  out << "eta_phase = " << num(config.wave.eta_phase) << "\n";
  out << "x_min = " << num(config.grid.x_min) << "\n";
  out << "x_max = " << num(config.grid.x_max) << "\n";
  out << "y_min = " << num(config.grid.y_min) << "\n";
  out << "y_max = " << num(config.grid.y_max) << "\n";
  out << "nx = " << config.grid.nx << "\n";
  out << "ny = " << config.grid.ny << "\n";
  out << "emit = ";
  for (size_t k = 0; k < config.outputs.size(); ++k)
    out << (k ? "," : "") << config.outputs[k];
  out << "\n";
  return out.str();
}

}  // namespace vloc
