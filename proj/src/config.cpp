#include "dem/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& text, int line) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError("key '" + key + "': expected a number, got '" + t + "'", line);
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text, int line) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + t + "'",
                      line);
  }
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text, int line) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_double(key, item, line));
  return out;
}

PhaseInit parse_phase(const std::string& key, const std::string& text, int line) {
  const std::vector<double> v = parse_list(key, text, line);
  if (v.size() != 4) {
    throw ConfigError("key '" + key + "': expected 4 values alpha,rho,u,p", line);
  }
  return {v[0], v[1], v[2], v[3]};
}

RegimeKind parse_regime(const std::string& text, int line) {
  const std::string t = trim(text);
  if (t == "constant") return RegimeKind::constant;
  if (t == "piecewise") return RegimeKind::piecewise;
  if (t == "stochastic") return RegimeKind::stochastic;
  if (t == "uniform_random") return RegimeKind::uniform_random;
  throw ConfigError("unknown regime '" + t + "' (constant|piecewise|stochastic|uniform_random)",
                    line);
}

int line_of(const std::map<std::string, int>& lines, const std::string& key) {
  const auto it = lines.find(key);
  return it == lines.end() ? 0 : it->second;
}

RunConfig base_two_phase(double p_left, double p_right) {
  RunConfig c;
  c.left = {PhaseInit{0.5, 50.0, 0.0, p_left}, PhaseInit{0.5, 1000.0, 0.0, p_left}};
  c.right = {PhaseInit{0.5, 50.0, 0.0, p_right}, PhaseInit{0.5, 1000.0, 0.0, p_right}};
  return c;
}

} // namespace

std::vector<std::string> preset_names() {
  return {"t1_uniform_vf", "t2_uniform_vf_relaxed", "t3_pure_phases",
          "t4_cavitation", "t5_piecewise_r",        "t6_dense_to_dilute"};
}

RunConfig preset(const std::string& name) {
  // Uniform volume fraction shock tube: gas rho=50, liquid rho=1000, 1e9 | 1e5 Pa.
  if (name == "t1_uniform_vf") {
    RunConfig c = base_two_phase(1e9, 1e5);
    c.preset = name;
    c.n_cells = 1000;
    c.t_end = 100e-6;
    c.output = "t1_uniform_vf.csv";
    return c;
  }
  // Same shock tube with infinite drag.
  if (name == "t2_uniform_vf_relaxed") {
    RunConfig c = preset("t1_uniform_vf");
    c.preset = name;
    c.n_cells = 3000;
    c.relaxation = RelaxationMode::continuous;
    c.output = "t2_uniform_vf_relaxed.csv";
    return c;
  }
  // Nearly pure liquid (2e8 Pa) against nearly pure gas (1e5 Pa).
  if (name == "t3_pure_phases") {
    RunConfig c;
    c.preset = name;
    const double eps = kVolumeFractionFloor;
    c.left = {PhaseInit{eps, 50.0, 0.0, 2e8}, PhaseInit{1.0 - eps, 1000.0, 0.0, 2e8}};
    c.right = {PhaseInit{1.0 - eps, 50.0, 0.0, 1e5}, PhaseInit{eps, 1000.0, 0.0, 1e5}};
    c.n_cells = 1000;
    c.t_end = 229e-6;
    c.relaxation = RelaxationMode::continuous;
    c.output = "t3_pure_phases.csv";
    return c;
  }
  // Liquid with 1% gas pulled apart at -10 | +10 m/s.
  if (name == "t4_cavitation") {
    RunConfig c;
    c.preset = name;
    c.left = {PhaseInit{1e-2, 50.0, -10.0, 1e5}, PhaseInit{1.0 - 1e-2, 1000.0, -10.0, 1e5}};
    c.right = {PhaseInit{1e-2, 50.0, 10.0, 1e5}, PhaseInit{1.0 - 1e-2, 1000.0, 10.0, 1e5}};
    c.n_cells = 2000;
    c.t_end = 2e-3;
    c.relaxation = RelaxationMode::continuous;
    c.output = "t4_cavitation.csv";
    return c;
  }
  // Uniform volume fraction shock tube with a piecewise constant regime.
  if (name == "t5_piecewise_r") {
    RunConfig c = preset("t1_uniform_vf");
    c.preset = name;
    c.n_cells = 2000;
    c.relaxation = RelaxationMode::continuous;
    const PiecewiseRegime pw = reference_piecewise_regime();
    c.regime = RegimeKind::piecewise;
    c.r_breakpoints = pw.breakpoints;
    c.r_values = pw.values;
    c.output = "t5_piecewise_r.csv";
    return c;
  }
  // Uniform volume fraction shock tube, stratified start with random regime drift.
  if (name == "t6_dense_to_dilute") {
    RunConfig c = preset("t1_uniform_vf");
    c.preset = name;
    c.n_cells = 3000;
    c.relaxation = RelaxationMode::continuous;
    c.regime = RegimeKind::stochastic;
    c.r = 0.0;
    c.epsilon = 1e-3;
    c.seed = 20240101;
    c.output = "t6_dense_to_dilute.csv";
    return c;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value, int line) {
  if (key == "x_min") c.x_min = parse_double(key, value, line);
  else if (key == "x_max") c.x_max = parse_double(key, value, line);
  else if (key == "x_split") c.x_split = parse_double(key, value, line);
  else if (key == "n_cells") c.n_cells = parse_unsigned(key, value, line);
  else if (key == "t_end") c.t_end = parse_double(key, value, line);
  else if (key == "cfl") c.cfl = parse_double(key, value, line);
  else if (key == "gamma1") c.eos[0].gamma = parse_double(key, value, line);
  else if (key == "pi1") c.eos[0].pi_inf = parse_double(key, value, line);
  else if (key == "gamma2") c.eos[1].gamma = parse_double(key, value, line);
  else if (key == "pi2") c.eos[1].pi_inf = parse_double(key, value, line);
  else if (key == "left1") c.left[0] = parse_phase(key, value, line);
  else if (key == "left2") c.left[1] = parse_phase(key, value, line);
  else if (key == "right1") c.right[0] = parse_phase(key, value, line);
  else if (key == "right2") c.right[1] = parse_phase(key, value, line);
  else if (key == "regime") c.regime = parse_regime(value, line);
  else if (key == "r") c.r = parse_double(key, value, line);
  else if (key == "r_breakpoints") c.r_breakpoints = parse_list(key, value, line);
  else if (key == "r_values") c.r_values = parse_list(key, value, line);
  else if (key == "epsilon") c.epsilon = parse_double(key, value, line);
  else if (key == "relaxation") {
    try {
      c.relaxation = relaxation_mode_from_string(trim(value));
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), line);
    }
  } else if (key == "snapshot_times") c.snapshot_times = parse_list(key, value, line);
  else if (key == "output") c.output = trim(value);
  else if (key == "seed") c.seed = parse_unsigned(key, value, line);
  else if (key == "threads") c.threads = static_cast<int>(parse_unsigned(key, value, line));
  else if (key == "preset") c = preset(trim(value));
  else throw ConfigError("unknown key '" + key + "'", line);
}

RunConfig parse_config(const std::string& text) {
  struct Entry {
    std::string key;
    std::string value;
    int line;
  };
  std::vector<Entry> entries;
  std::map<std::string, int> lines;

  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    Entry e{trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line};
    if (e.key.empty()) throw ConfigError("empty key", line);
    if (lines.count(e.key)) {
      throw ConfigError("duplicate key '" + e.key + "' (first set on line " +
                            std::to_string(lines[e.key]) + ")",
                        line);
    }
    lines[e.key] = line;
    entries.push_back(std::move(e));
  }

  RunConfig config;
  if (lines.count("preset")) {
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [](const Entry& e) { return e.key == "preset"; });
    try {
      config = preset(it->value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), it->line);
    }
  } else {
    for (const char* key : {"n_cells", "t_end", "left1", "left2", "right1", "right2"}) {
      if (!lines.count(key)) throw ConfigError(std::string("missing required key '") + key + "'");
    }
  }
  for (const Entry& e : entries) {
    if (e.key != "preset") apply_setting(config, e.key, e.value, e.line);
  }
  validate_config(config, lines);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

void validate_config(const RunConfig& c, const std::map<std::string, int>& lines) {
  auto fail = [&](const std::string& key, const std::string& what) {
    throw ConfigError(what, line_of(lines, key));
  };
  if (!(c.x_max > c.x_min)) fail("x_max", "x_max must exceed x_min");
  if (!(c.x_split >= c.x_min && c.x_split <= c.x_max)) fail("x_split", "x_split outside domain");
  if (c.n_cells < 3) fail("n_cells", "n_cells must be at least 3");
  if (!(c.t_end >= 0.0)) fail("t_end", "t_end must be non-negative");
  if (!(c.cfl > 0.0 && c.cfl <= 1.0)) fail("cfl", "cfl must lie in (0,1]");
  if (c.threads < 1) fail("threads", "threads must be at least 1");
  for (int k = 0; k < 2; ++k) {
    const std::string idx = std::to_string(k + 1);
    try {
      make_eos(c.eos[k].gamma, c.eos[k].pi_inf);
    } catch (const InvalidStateError& e) {
      fail("gamma" + idx, std::string("phase ") + idx + ": " + e.what());
    }
  }
  for (int side = 0; side < 2; ++side) {
    const auto& st = side == 0 ? c.left : c.right;
    const std::string name = side == 0 ? "left" : "right";
    for (int k = 0; k < 2; ++k) {
      const std::string key = name + std::to_string(k + 1);
      const PhaseInit& v = st[k];
      if (!(v.alpha > 0.0 && v.alpha < 1.0)) fail(key, key + ": alpha must lie in (0,1)");
      if (!is_admissible(c.eos[k], v.rho, v.p)) {
        fail(key, key + ": inadmissible state (need rho > 0 and p + pi > 0)");
      }
    }
    if (std::abs(st[0].alpha + st[1].alpha - 1.0) > kSaturationTolerance) {
      fail(name + "2", name + " state: volume fractions must sum to 1");
    }
  }
  for (double t : c.snapshot_times) {
    if (!(t >= 0.0 && t <= c.t_end)) fail("snapshot_times", "snapshot time outside [0, t_end]");
  }
  if (!(c.epsilon >= 0.0)) fail("epsilon", "epsilon must be non-negative");
  if (c.regime != RegimeKind::piecewise && !(c.r >= 0.0 && c.r <= 1.0)) {
    fail("r", "r must lie in [0,1]");
  }
  if (c.regime == RegimeKind::piecewise) {
    if (c.r_values.size() != c.r_breakpoints.size() + 1) {
      fail("r_values", "r_values needs exactly one more entry than r_breakpoints");
    }
    for (double v : c.r_values) {
      if (!(v >= 0.0 && v <= 1.0)) fail("r_values", "r values must lie in [0,1]");
    }
    for (std::size_t j = 0; j < c.r_breakpoints.size(); ++j) {
      const double b = c.r_breakpoints[j];
      if (b < c.x_min || b > c.x_max) fail("r_breakpoints", "breakpoint outside domain");
      if (j > 0 && !(b > c.r_breakpoints[j - 1])) {
        fail("r_breakpoints", "breakpoints must be increasing");
      }
    }
  }
}

RegimePolicy regime_policy(const RunConfig& c) {
  switch (c.regime) {
    case RegimeKind::constant: return ConstantRegime{c.r};
    case RegimeKind::piecewise: return PiecewiseRegime{c.r_breakpoints, c.r_values};
    case RegimeKind::stochastic: return StochasticRegime{c.epsilon, c.r, c.seed};
    case RegimeKind::uniform_random: return UniformRandomRegime{c.seed};
  }
  return ConstantRegime{c.r};
}

std::string regime_kind_name(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::constant: return "constant";
    case RegimeKind::piecewise: return "piecewise";
    case RegimeKind::stochastic: return "stochastic";
    case RegimeKind::uniform_random: return "uniform_random";
  }
  return "constant";
}

MixtureCell initial_cell(const RunConfig& c, bool left_side) {
  const auto& st = left_side ? c.left : c.right;
  return make_cell(st[0].alpha, {st[0].rho, st[0].u, st[0].p}, st[1].alpha,
                   {st[1].rho, st[1].u, st[1].p}, c.eos);
}

SimulationSetup make_setup(const RunConfig& c) {
  validate_config(c);
  SimulationSetup s;
  s.eos = {make_eos(c.eos[0].gamma, c.eos[0].pi_inf), make_eos(c.eos[1].gamma, c.eos[1].pi_inf)};
  s.grid = make_riemann_grid(c.x_min, c.x_max, c.n_cells, c.x_split, initial_cell(c, true),
                             initial_cell(c, false));
  s.regime = regime_policy(c);
  s.relaxation = c.relaxation;
  s.cfl = c.cfl;
  s.t_end = c.t_end;
  s.snapshot_times = c.snapshot_times;
  s.threads = c.threads;
  return s;
}

} // namespace dem
