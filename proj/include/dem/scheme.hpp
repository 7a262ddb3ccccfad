#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dem/probability.hpp"
#include "dem/regime.hpp"
#include "dem/riemann.hpp"
#include "dem/state.hpp"

namespace dem {

/// Uniform 1D mesh. Interface j sits at x_min + j dx, between cells j-1 and j.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::vector<MixtureCell> cells;

  std::size_t n_cells() const { return cells.size(); }
  double dx() const { return (x_max - x_min) / static_cast<double>(cells.size()); }
  double x_center(std::size_t i) const { return x_min + (static_cast<double>(i) + 0.5) * dx(); }
  double x_interface(std::size_t j) const { return x_min + static_cast<double>(j) * dx(); }
  std::vector<double> interface_positions() const;
};

/// Throws unless n_cells >= 3, dx > 0 and every cell is valid.
void validate_grid(const Grid1D& grid, const EosPair& eos);

/// Two-state initial data split at x_split.
Grid1D make_riemann_grid(double x_min, double x_max, std::size_t n_cells, double x_split,
                         const MixtureCell& left, const MixtureCell& right);

/// +1 if sigma >= 0, -1 otherwise.
inline int beta(double sigma) { return sigma >= 0.0 ? 1 : -1; }

/// (x)^+ applied to a flux indicator, as a 0/1 weight.
inline double positive_part(int b) { return b > 0 ? 1.0 : 0.0; }

/// Everything computed on one interface: the four phase-pair Riemann fans and the probabilities.
struct InterfaceFluxSet {
  /// fan[a][b]: phase a in the left cell against phase b in the right cell.
  std::array<std::array<RiemannFan, 2>, 2> fan;
  /// Probabilities seen from phase 1 (k = 1, l = 2).
  ProbabilityQuad quad;

  /// Probabilities seen from phase k (0 or 1).
  ProbabilityQuad quad_for(int k) const;
};

/// Solves the four Riemann problems of an interface and builds its quad.
InterfaceFluxSet interface_data(const MixtureCell& left, const MixtureCell& right,
                                const EosPair& eos, double r);

/// Ensemble-averaged conservative flux of phase k through the interface.
Flux ensemble_flux(const InterfaceFluxSet& iface, int k);

/// Lagrangian flux contributions to phase k of the cell between the two interfaces.
Flux boundary_lagrangian(const InterfaceFluxSet& left_iface, const InterfaceFluxSet& right_iface,
                         int k);

/// Right-hand side of the volume-fraction update: alpha^{n+1} = alpha^n + dt/dx * rhs.
double volume_fraction_rhs(const InterfaceFluxSet& left_iface,
                           const InterfaceFluxSet& right_iface, int k);

/// Grid padded with two transmissive ghost cells per side.
std::vector<MixtureCell> apply_bc(const Grid1D& grid);

inline constexpr std::size_t kGhostCells = 2;

/// Largest stable time step cfl * dx / max(|u| + a).
double cfl_dt(const Grid1D& grid, const EosPair& eos, double cfl);

/// Raw updated cell quantities before division by alpha.
struct PhaseUpdate {
  double alpha;
  Conserved alpha_cons;
};

struct HyperbolicUpdate {
  std::vector<std::array<PhaseUpdate, 2>> cells;
  /// Ensemble flux of each phase through the left and right domain boundaries.
  std::array<Flux, 2> boundary_flux_left;
  std::array<Flux, 2> boundary_flux_right;
};

/// Forward-Euler update of (alpha, alpha U). Regime values are indexed by interface (size n+1).
/// threads > 1 splits interface and cell loops; results do not depend on the thread count.
HyperbolicUpdate hyperbolic_update(const Grid1D& grid, const EosPair& eos,
                                   const std::vector<double>& r, double dt, int threads = 1);

/// hyperbolic_update followed by reconstruction of U = (alpha U) / alpha and validation.
Grid1D hyperbolic_step(const Grid1D& grid, const EosPair& eos, const std::vector<double>& r,
                       double dt, int threads = 1, HyperbolicUpdate* raw = nullptr);

} // namespace dem
