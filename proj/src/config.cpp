#include "eit2des/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "eit2des/csv.hpp"
#include "eit2des/errors.hpp"

namespace eit2des {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view value, const std::string& key, int line_no) {
  const std::string buf(value);
  char* end = nullptr;
  const double x = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty()) {
    throw ConfigError("line " + std::to_string(line_no) + ": value of '" + key +
                      "' is not a number: '" + buf + "'");
  }
  return x;
}

bool parse_on_off(std::string_view value, const std::string& key, int line_no) {
  if (value == "on") return true;
  if (value == "off") return false;
  throw ConfigError("line " + std::to_string(line_no) + ": '" + key +
                    "' must be 'on' or 'off'");
}

std::vector<double> parse_number_list(std::string_view value, const std::string& key,
                                      int line_no) {
  std::vector<double> out;
  std::string buf(value);
  std::replace(buf.begin(), buf.end(), ',', ' ');
  std::istringstream is(buf);
  std::string token;
  while (is >> token) {
    out.push_back(parse_number(token, key, line_no));
  }
  if (out.empty()) {
    throw ConfigError("line " + std::to_string(line_no) + ": '" + key +
                      "' needs at least one value");
  }
  return out;
}

}  // namespace

RunConfig::RunConfig()
    : params{}, grid(SpectralGrid::centered_default(params.omega_ab)),
      t2_list{0.0, 2.0, 4.0, 300.0} {}

void RunConfig::validate() const {
  params.validate();
  grid.validate();
  if (t2_list.empty()) throw ConfigError("t2 list must not be empty");
  for (std::size_t i = 0; i < t2_list.size(); ++i) {
    if (!(t2_list[i] >= 0.0)) throw ConfigError("t2 values must be >= 0");
    if (i > 0 && t2_list[i] < t2_list[i - 1]) {
      throw ConfigError("t2 values must be sorted ascending");
    }
  }
}

void RunConfig::write_summary(std::ostream& os) const {
  const auto num = [](double v) { return csv::format_number(v); };
  os << "omega_ab = " << num(params.omega_ab) << "\n"
     << "Gamma1 = " << num(params.Gamma1) << "\n"
     << "Gamma2 = " << num(params.Gamma2) << "\n"
     << "gamma0_a = " << num(params.gamma0_a) << "\n"
     << "gamma0_b = " << num(params.gamma0_b) << "\n"
     << "gamma0_c = " << num(params.gamma0_c) << "\n"
     << "Omega = " << num(params.Omega) << "\n"
     << "omega1_min = " << num(grid.omega1_min) << "\n"
     << "omega1_max = " << num(grid.omega1_max) << "\n"
     << "omega1_step = " << num(grid.omega1_step) << "\n"
     << "omega3_min = " << num(grid.omega3_min) << "\n"
     << "omega3_max = " << num(grid.omega3_max) << "\n"
     << "omega3_step = " << num(grid.omega3_step) << "\n";
  os << "t2 =";
  for (double t : t2_list) os << " " << num(t);
  os << "\n"
     << "control = " << (control_on ? "on" : "off") << "\n"
     << "kind = " << signal_kind_name(signal_kind) << "\n"
     << "out = " << output_path << "\n";
}

SignalKind parse_signal_kind(std::string_view token) {
  if (token == "rp") return SignalKind::rephasing;
  if (token == "nr") return SignalKind::nonrephasing;
  if (token == "abs") return SignalKind::absorptive;
  throw ConfigError("kind must be one of rp|nr|abs, got '" + std::string(token) + "'");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  bool explicit_grid_min1 = false, explicit_grid_max1 = false;
  bool explicit_grid_min3 = false, explicit_grid_max3 = false;
  bool t2_seen = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }

    if (key == "omega_ab") {
      cfg.params.omega_ab = parse_number(value, key, line_no);
    } else if (key == "Gamma1") {
      cfg.params.Gamma1 = parse_number(value, key, line_no);
    } else if (key == "Gamma2") {
      cfg.params.Gamma2 = parse_number(value, key, line_no);
    } else if (key == "gamma0_a") {
      cfg.params.gamma0_a = parse_number(value, key, line_no);
    } else if (key == "gamma0_b") {
      cfg.params.gamma0_b = parse_number(value, key, line_no);
    } else if (key == "gamma0_c") {
      cfg.params.gamma0_c = parse_number(value, key, line_no);
    } else if (key == "Omega") {
      cfg.params.Omega = parse_number(value, key, line_no);
    } else if (key == "omega1_min") {
      cfg.grid.omega1_min = parse_number(value, key, line_no);
      explicit_grid_min1 = true;
    } else if (key == "omega1_max") {
      cfg.grid.omega1_max = parse_number(value, key, line_no);
      explicit_grid_max1 = true;
    } else if (key == "omega1_step") {
      cfg.grid.omega1_step = parse_number(value, key, line_no);
    } else if (key == "omega3_min") {
      cfg.grid.omega3_min = parse_number(value, key, line_no);
      explicit_grid_min3 = true;
    } else if (key == "omega3_max") {
      cfg.grid.omega3_max = parse_number(value, key, line_no);
      explicit_grid_max3 = true;
    } else if (key == "omega3_step") {
      cfg.grid.omega3_step = parse_number(value, key, line_no);
    } else if (key == "t2") {
      const auto values = parse_number_list(value, key, line_no);
      if (!t2_seen) cfg.t2_list.clear();
      t2_seen = true;
      cfg.t2_list.insert(cfg.t2_list.end(), values.begin(), values.end());
    } else if (key == "control") {
      cfg.control_on = parse_on_off(value, key, line_no);
    } else if (key == "kind") {
      cfg.signal_kind = parse_signal_kind(value);
    } else if (key == "out") {
      cfg.output_path = std::string(value);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        key + "'");
    }
  }

  // The default grid tracks omega_ab unless axes were given explicitly.
  const SpectralGrid centered = SpectralGrid::centered_default(cfg.params.omega_ab);
  if (!explicit_grid_min1) cfg.grid.omega1_min = centered.omega1_min;
  if (!explicit_grid_max1) cfg.grid.omega1_max = centered.omega1_max;
  if (!explicit_grid_min3) cfg.grid.omega3_min = centered.omega3_min;
  if (!explicit_grid_max3) cfg.grid.omega3_max = centered.omega3_max;

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace eit2des
