#include "dem/simulation.hpp"

#include <algorithm>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

namespace {

// Re-raises the active solver exception with a context prefix, keeping its type.
[[noreturn]] void rethrow_with_context(const std::string& context) {
  try {
    throw;
  } catch (const InvalidStateError& e) {
    throw InvalidStateError(context + e.what());
  } catch (const SolverError& e) {
    throw SolverError(context + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(context + e.what());
  }
}

} // namespace

Simulation::Simulation(SimulationSetup setup)
    : setup_(std::move(setup)), grid_(setup_.grid) {
  validate_grid(grid_, setup_.eos);
  if (!(setup_.cfl > 0.0 && setup_.cfl <= 1.0)) throw ConfigError("cfl must lie in (0,1]");
  if (!(setup_.t_end >= 0.0)) throw ConfigError("t_end must be non-negative");
  regime_ = init_field(setup_.regime, grid_.interface_positions(), grid_.x_min, grid_.x_max);
}

StepReport Simulation::step(double t_stop) {
  StepReport report;
  double dt = cfl_dt(grid_, setup_.eos, setup_.cfl);
  if (t_ + dt >= t_stop) dt = t_stop - t_;
  if (!(dt > 0.0)) throw SolverError("non-positive time step");

  try {
    HyperbolicUpdate raw;
    hyperbolic_ = hyperbolic_step(grid_, setup_.eos, regime_.values(), dt, setup_.threads, &raw);
    for (int k = 0; k < 2; ++k) {
      report.boundary_inflow[k] = dt * (raw.boundary_flux_left[k] - raw.boundary_flux_right[k]);
    }
  } catch (const Error&) {
    std::ostringstream os;
    os.precision(17);
    os << "t=" << t_ << ", step " << steps_ + 1 << ": ";
    rethrow_with_context(os.str());
  }

  if (setup_.relaxation == RelaxationMode::none) {
    grid_ = hyperbolic_;
  } else {
    grid_.cells.resize(hyperbolic_.cells.size());
    for (std::size_t i = 0; i < hyperbolic_.cells.size(); ++i) {
      try {
        grid_.cells[i] = relax(hyperbolic_.cells[i], setup_.eos, setup_.relaxation);
      } catch (const Error&) {
        std::ostringstream os;
        os.precision(17);
        os << "t=" << t_ << ", step " << steps_ + 1 << ", relaxation in cell " << i
           << " (x=" << grid_.x_center(i) << "): ";
        rethrow_with_context(os.str());
      }
    }
  }

  regime_.advance();
  t_ = (t_ + dt >= t_stop) ? t_stop : t_ + dt;
  ++steps_;
  report.t = t_;
  report.dt = dt;
  report.hyperbolic = &hyperbolic_;
  return report;
}

std::vector<Snapshot> run(const SimulationSetup& setup, const StepObserver& observer) {
  std::vector<double> times;
  for (double t : setup.snapshot_times) {
    if (t > 0.0 && t < setup.t_end) times.push_back(t);
  }
  times.push_back(setup.t_end);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  Simulation sim(setup);
  std::vector<Snapshot> out;
  for (double target : times) {
    while (sim.time() < target) {
      const StepReport rep = sim.step(target);
      if (observer) observer(sim, rep);
    }
    out.push_back({sim.time(), sim.grid(), sim.regime().values()});
  }
  return out;
}

} // namespace dem
