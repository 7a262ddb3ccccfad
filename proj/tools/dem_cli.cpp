// Command-line driver: runs experiments, writes CSV snapshots and compares them
// with exact solutions.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "dem/config.hpp"
#include "dem/errors.hpp"
#include "dem/exact_riemann.hpp"
#include "dem/oracle.hpp"
#include "dem/simulation.hpp"
#include "dem/snapshot.hpp"

namespace fs = std::filesystem;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Output file of snapshot `index` out of `count`; the last one uses the configured path.
std::string snapshot_path(const std::string& output, std::size_t index, std::size_t count) {
  if (index + 1 == count) return output;
  const fs::path p(output);
  return (p.parent_path() / (p.stem().string() + "_" + std::to_string(index) +
                             p.extension().string()))
      .string();
}

std::vector<std::string> run_config(const dem::RunConfig& config) {
  const dem::SimulationSetup setup = dem::make_setup(config);
  const std::vector<dem::Snapshot> snaps = dem::run(setup);
  dem::SnapshotMeta meta;
  meta.seed = config.seed;
  meta.cfl = config.cfl;
  meta.relaxation = dem::to_string(config.relaxation);
  meta.regime = dem::describe(setup.regime);
  meta.preset = config.preset;

  std::vector<std::string> written;
  for (std::size_t i = 0; i < snaps.size(); ++i) {
    const std::string path = snapshot_path(config.output, i, snaps.size());
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    dem::write_snapshot(path, dem::to_table(snaps[i], setup.eos, meta));
    written.push_back(path);
  }
  return written;
}

std::vector<double> parse_numbers(const std::string& text, std::size_t expected,
                                  const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw dem::ConfigError(std::string(what) + ": cannot parse '" + item + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (expected && out.size() != expected) {
    throw dem::ConfigError(std::string(what) + ": expected " + std::to_string(expected) +
                           " comma-separated values");
  }
  return out;
}

void print_report(const dem::ErrorReport& report) {
  std::cout << "# t=" << fmt17(report.t) << '\n' << "field,l1,linf,relative_l1\n";
  for (const dem::FieldError& f : report.fields) {
    std::cout << f.field << ',' << fmt17(f.l1) << ',' << fmt17(f.linf) << ','
              << fmt17(f.relative_l1()) << '\n';
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional two-phase discrete equation method solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_override;
  auto* run_cmd = app.add_subcommand("run", "Run a configuration file");
  run_cmd->add_option("config", config_path, "Configuration file")->required();
  run_cmd->add_option("-o,--output", output_override, "Override the output path");

  std::string preset_name;
  std::vector<std::string> overrides;
  bool list_presets = false;
  auto* preset_cmd = app.add_subcommand("preset", "Run a built-in experiment");
  preset_cmd->add_option("name", preset_name, "Preset name");
  preset_cmd->add_option("--override", overrides, "key=value overriding a preset field");
  preset_cmd->add_flag("--list", list_presets, "List preset names");

  std::string left_text;
  std::string right_text;
  std::string xi_text;
  auto* rp_cmd = app.add_subcommand("riemann", "Solve one exact Riemann problem");
  rp_cmd->add_option("left", left_text, "rho,u,p,gamma,pi of the left state")->required();
  rp_cmd->add_option("right", right_text, "rho,u,p,gamma,pi of the right state")->required();
  rp_cmd->add_option("--xi", xi_text, "comma-separated x/t values to sample");

  std::string snapshot_path_arg;
  std::string oracle_text;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare a snapshot with an exact solution");
  cmp_cmd->add_option("snapshot", snapshot_path_arg, "Snapshot CSV")->required();
  cmp_cmd->add_option("oracle", oracle_text, "<phase1|phase2|mixture>:<preset or config>")
      ->required();

  std::string sweep_config;
  std::string sweep_values;
  auto* sweep_cmd = app.add_subcommand("sweep-r", "Repeat a run over constant r values");
  sweep_cmd->add_option("config", sweep_config, "Configuration file or preset name")->required();
  sweep_cmd->add_option("--values", sweep_values, "comma-separated r values")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      dem::RunConfig config = dem::load_config(config_path);
      if (!output_override.empty()) config.output = output_override;
      for (const std::string& p : run_config(config)) std::cout << "wrote " << p << '\n';
    } else if (*preset_cmd) {
      if (list_presets) {
        for (const std::string& n : dem::preset_names()) std::cout << n << '\n';
        return 0;
      }
      if (preset_name.empty()) throw dem::ConfigError("preset name required (see --list)");
      dem::RunConfig config = dem::preset(preset_name);
      for (const std::string& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw dem::ConfigError("override must read key=value");
        dem::apply_setting(config, o.substr(0, eq), o.substr(eq + 1));
      }
      dem::validate_config(config);
      for (const std::string& p : run_config(config)) std::cout << "wrote " << p << '\n';
    } else if (*rp_cmd) {
      const auto l = parse_numbers(left_text, 5, "left state");
      const auto r = parse_numbers(right_text, 5, "right state");
      const dem::ExactRiemannSolution sol =
          dem::exact_rp({l[0], l[1], l[2]}, {r[0], r[1], r[2]}, dem::make_eos(l[3], l[4]),
                        dem::make_eos(r[3], r[4]));
      std::cout << "# p_star=" << fmt17(sol.p_star()) << '\n'
                << "# u_star=" << fmt17(sol.u_star()) << '\n';
      if (!xi_text.empty()) {
        std::cout << "xi,rho,u,p\n";
        for (double xi : parse_numbers(xi_text, 0, "xi")) {
          const dem::Primitive v = sol.sample(xi);
          std::cout << fmt17(xi) << ',' << fmt17(v.rho) << ',' << fmt17(v.u) << ','
                    << fmt17(v.p) << '\n';
        }
      }
    } else if (*cmp_cmd) {
      const dem::SnapshotTable table = dem::read_snapshot(snapshot_path_arg);
      print_report(dem::compare_oracle(table, dem::parse_oracle_spec(oracle_text)));
    } else if (*sweep_cmd) {
      const dem::RunConfig base = fs::exists(sweep_config) ? dem::load_config(sweep_config)
                                                           : dem::preset(sweep_config);
      for (double r : parse_numbers(sweep_values, 0, "values")) {
        dem::RunConfig config = base;
        config.regime = dem::RegimeKind::constant;
        config.r = r;
        const fs::path p(base.output);
        config.output = (p.parent_path() / (p.stem().string() + "_r" + fmt17(r) +
                                            p.extension().string()))
                            .string();
        dem::validate_config(config);
        for (const std::string& path : run_config(config)) std::cout << "wrote " << path << '\n';
      }
    }
  } catch (const dem::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
