#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dem/regime.hpp"
#include "dem/relaxation.hpp"
#include "dem/simulation.hpp"
#include "dem/state.hpp"

namespace dem {

/// Initial (alpha, rho, u, p) of one phase on one side of the split.
struct PhaseInit {
  double alpha;
  double rho;
  double u;
  double p;
};

enum class RegimeKind { constant, piecewise, stochastic, uniform_random };

struct RunConfig {
  std::string preset;  ///< base preset name, empty for a plain config
  double x_min = -1.0;
  double x_max = 1.0;
  double x_split = 0.0;
  std::size_t n_cells = 1000;
  double t_end = 0.0;
  double cfl = 0.9;
  EosPair eos{EosParams{1.4, 0.0}, EosParams{4.4, 6e8}};
  std::array<PhaseInit, 2> left{};
  std::array<PhaseInit, 2> right{};
  RegimeKind regime = RegimeKind::constant;
  double r = 0.0;  ///< constant value, or initial value of the stochastic field
  std::vector<double> r_breakpoints;
  std::vector<double> r_values;
  double epsilon = 0.0;
  RelaxationMode relaxation = RelaxationMode::none;
  std::vector<double> snapshot_times;
  std::string output = "snapshot.csv";
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Names of the built-in experiments.
std::vector<std::string> preset_names();

/// Built-in experiment; throws ConfigError for an unknown name.
RunConfig preset(const std::string& name);

/// Parses the key=value format. A "preset" key selects the base configuration;
/// every other key overrides it. Errors carry the 1-based line number.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file.
RunConfig load_config(const std::string& path);

/// Applies one key=value pair (as used by --override). line is reported in errors when > 0.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value,
                   int line = 0);

/// Checks every invariant of the configuration; throws ConfigError.
/// lines maps keys to the line that set them, for error reporting.
void validate_config(const RunConfig& config, const std::map<std::string, int>& lines = {});

RegimePolicy regime_policy(const RunConfig& config);

std::string regime_kind_name(RegimeKind kind);

/// Builds the initial grid and solver setup.
SimulationSetup make_setup(const RunConfig& config);

/// Mixture cell of one side of the initial split.
MixtureCell initial_cell(const RunConfig& config, bool left_side);

} // namespace dem
