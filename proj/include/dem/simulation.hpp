#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dem/regime.hpp"
#include "dem/relaxation.hpp"
#include "dem/scheme.hpp"

namespace dem {

struct SimulationSetup {
  Grid1D grid;
  EosPair eos;
  RegimePolicy regime = ConstantRegime{0.0};
  RelaxationMode relaxation = RelaxationMode::none;
  double cfl = 0.9;
  double t_end = 0.0;
  /// Extra output times in (0, t_end); t_end is always included.
  std::vector<double> snapshot_times;
  int threads = 1;
};

struct Snapshot {
  double t = 0.0;
  Grid1D grid;
  std::vector<double> r;  ///< regime value per interface (n_cells + 1)
};

struct StepReport {
  double t = 0.0;  ///< time after the step
  double dt = 0.0;
  /// dt times the ensemble flux entering through the left boundary minus leaving through the right.
  std::array<Conserved, 2> boundary_inflow;
  /// Grid after the hyperbolic sub-step, before relaxation.
  const Grid1D* hyperbolic = nullptr;
};

class Simulation {
public:
  explicit Simulation(SimulationSetup setup);

  double time() const { return t_; }
  const Grid1D& grid() const { return grid_; }
  const RegimeField& regime() const { return regime_; }
  const SimulationSetup& setup() const { return setup_; }
  long steps() const { return steps_; }

  /// One full step: CFL time step clipped to t_stop, hyperbolic update, relaxation, regime update.
  StepReport step(double t_stop);

private:
  SimulationSetup setup_;
  Grid1D grid_;
  Grid1D hyperbolic_;
  RegimeField regime_;
  double t_ = 0.0;
  long steps_ = 0;
};

using StepObserver = std::function<void(const Simulation&, const StepReport&)>;

/// Runs to t_end and returns one snapshot per requested time, in increasing order.
std::vector<Snapshot> run(const SimulationSetup& setup, const StepObserver& observer = {});

} // namespace dem
