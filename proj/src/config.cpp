#include "wsnsim/config.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "wsnsim/report.hpp"

namespace wsnsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::string joined_keys() {
  std::string out;
  for (const std::string& k : config_keys()) {
    if (!out.empty()) out += ", ";
    out += k;
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": cannot parse '" + value +
                                "' as a number");
  }
}

std::int64_t parse_i64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": cannot parse '" + value +
                                "' as an integer");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  const std::int64_t v = parse_i64(key, value);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw std::invalid_argument(key + ": value '" + value + "' out of range");
  }
  return static_cast<int>(v);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  if (t.empty() || t[0] == '-' || t[0] == '+') {
    throw std::invalid_argument(key + ": cannot parse '" + value +
                                "' as an unsigned integer");
  }
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": cannot parse '" + value +
                                "' as an unsigned integer");
  }
}

struct Pending {
  SimConfig config;
  std::optional<double> bs_x;  // sink defaults to the field centre, so the
  std::optional<double> bs_y;  // explicit coordinates are resolved last
};

void apply_pair(Pending& p, const std::string& key, const std::string& value,
                const std::string& where) {
  SimConfig& c = p.config;
  if (key == "sim.n_nodes") {
    c.n_nodes = parse_int(key, value);
  } else if (key == "sim.field_side") {
    c.field_side = parse_double(key, value);
  } else if (key == "sim.bs_x") {
    p.bs_x = parse_double(key, value);
  } else if (key == "sim.bs_y") {
    p.bs_y = parse_double(key, value);
  } else if (key == "sim.strategy") {
    try {
      c.strategy = strategy_from_string(value);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(
          "sim.strategy: unknown value '" + value +
          "' (valid: LEACH, DEEC, EDEEC, BEENISH)");
    }
  } else if (key == "sim.seed") {
    c.seed = parse_u64(key, value);
  } else if (key == "sim.max_rounds") {
    c.max_rounds = parse_i64(key, value);
  } else if (key == "radio.e_elec") {
    c.radio.e_elec = parse_double(key, value);
  } else if (key == "radio.eps_fs") {
    c.radio.eps_fs = parse_double(key, value);
  } else if (key == "radio.eps_mp") {
    c.radio.eps_mp = parse_double(key, value);
  } else if (key == "radio.e_da") {
    c.radio.e_da = parse_double(key, value);
  } else if (key == "radio.packet_bits") {
    c.radio.packet_bits = parse_i64(key, value);
  } else if (key == "het.m") {
    c.het.m = parse_double(key, value);
  } else if (key == "het.m0") {
    c.het.m0 = parse_double(key, value);
  } else if (key == "het.m1") {
    c.het.m1 = parse_double(key, value);
  } else if (key == "het.a") {
    c.het.a = parse_double(key, value);
  } else if (key == "het.b") {
    c.het.b = parse_double(key, value);
  } else if (key == "het.u") {
    c.het.u = parse_double(key, value);
  } else if (key == "het.e0") {
    c.het.e0 = parse_double(key, value);
  } else if (key == "het.p_opt") {
    c.het.p_opt = parse_double(key, value);
  } else {
    throw std::invalid_argument(where + ": unknown key '" + key +
                                "' (valid keys: " + joined_keys() + ")");
  }
}

void apply_line(Pending& p, const std::string& raw, const std::string& where) {
  std::string line = raw;
  if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  line = trim(line);
  if (line.empty()) return;
  const std::size_t eq = line.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument(where + ": expected key=value, got '" +
                                trim(raw) + "'");
  }
  const std::string key = trim(line.substr(0, eq));
  const std::string value = trim(line.substr(eq + 1));
  if (key.empty()) throw std::invalid_argument(where + ": empty key");
  apply_pair(p, key, value, where);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "sim.n_nodes",  "sim.field_side", "sim.bs_x",   "sim.bs_y",
      "sim.strategy", "sim.seed",       "sim.max_rounds",
      "radio.e_elec", "radio.eps_fs",   "radio.eps_mp",
      "radio.e_da",   "radio.packet_bits",
      "het.m",        "het.m0",         "het.m1",     "het.a",
      "het.b",        "het.u",          "het.e0",     "het.p_opt",
  };
  return keys;
}

SimConfig default_config() { return SimConfig{}; }

SimConfig parse_config(const std::string& text,
                       const std::vector<std::string>& overrides) {
  Pending p;
  p.config = default_config();
  std::istringstream stream(text);
  std::string line;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    apply_line(p, line, "config line " + std::to_string(lineno));
  }
  for (const std::string& o : overrides) {
    apply_line(p, o, "override '" + o + "'");
  }
  p.config.bs_x = p.bs_x.value_or(p.config.field_side / 2.0);
  p.config.bs_y = p.bs_y.value_or(p.config.field_side / 2.0);
  p.config.validate();
  return p.config;
}

SimConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("config file '" + path + "': cannot read");
  }
  std::ostringstream text;
  text << file.rdbuf();
  return parse_config(text.str(), overrides);
}

std::vector<std::pair<std::string, std::string>> config_echo(const SimConfig& c) {
  return {
      {"sim.n_nodes", std::to_string(c.n_nodes)},
      {"sim.field_side", format_exact(c.field_side)},
      {"sim.bs_x", format_exact(c.bs_x)},
      {"sim.bs_y", format_exact(c.bs_y)},
      {"sim.strategy", to_string(c.strategy)},
      {"sim.seed", std::to_string(c.seed)},
      {"sim.max_rounds", std::to_string(c.max_rounds)},
      {"radio.e_elec", format_exact(c.radio.e_elec)},
      {"radio.eps_fs", format_exact(c.radio.eps_fs)},
      {"radio.eps_mp", format_exact(c.radio.eps_mp)},
      {"radio.e_da", format_exact(c.radio.e_da)},
      {"radio.packet_bits", std::to_string(c.radio.packet_bits)},
      {"het.m", format_exact(c.het.m)},
      {"het.m0", format_exact(c.het.m0)},
      {"het.m1", format_exact(c.het.m1)},
      {"het.a", format_exact(c.het.a)},
      {"het.b", format_exact(c.het.b)},
      {"het.u", format_exact(c.het.u)},
      {"het.e0", format_exact(c.het.e0)},
      {"het.p_opt", format_exact(c.het.p_opt)},
  };
}

}  // namespace wsnsim
