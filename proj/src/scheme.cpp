#include "dem/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "dem/errors.hpp"

namespace dem {

namespace {

// Runs f(i) for i in [0, n); contiguous chunks per thread, so each index is handled exactly once.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  if (threads <= 1 || n < 2 * static_cast<std::size_t>(threads)) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t t = static_cast<std::size_t>(threads);
  std::vector<std::jthread> pool;
  pool.reserve(t);
  for (std::size_t c = 0; c < t; ++c) {
    const std::size_t begin = n * c / t;
    const std::size_t end = n * (c + 1) / t;
    pool.emplace_back([&f, begin, end] {
      for (std::size_t i = begin; i < end; ++i) f(i);
    });
  }
}

InterfaceFluxSet interface_from_primitives(const std::array<Primitive, 2>& left,
                                           const std::array<Primitive, 2>& right,
                                           double alpha_left, double alpha_right,
                                           const EosPair& eos, double r) {
  InterfaceFluxSet out{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out.fan[a][b] = hllc(left[a], right[b], eos[a], eos[b]);
    }
  }
  out.quad = convex_quad({alpha_left, alpha_right}, r);
  return out;
}

// Signed four-term sum of cross-phase Lagrangian contributions for phase k.
template <class Lag>
Flux boundary_sum(const InterfaceFluxSet& left_iface, const InterfaceFluxSet& right_iface, int k,
                  Lag lag) {
  const int l = 1 - k;
  const ProbabilityQuad ql = left_iface.quad_for(k);
  const ProbabilityQuad qr = right_iface.quad_for(k);
  const RiemannFan& l_lk = left_iface.fan[l][k];
  const RiemannFan& l_kl = left_iface.fan[k][l];
  const RiemannFan& r_lk = right_iface.fan[l][k];
  const RiemannFan& r_kl = right_iface.fan[k][l];

  Flux sum = (positive_part(beta(l_lk.sigma)) * ql.p_lk) * lag(l_lk);
  sum -= (positive_part(beta(l_kl.sigma)) * ql.p_kl) * lag(l_kl);
  sum += (positive_part(-beta(r_lk.sigma)) * qr.p_lk) * lag(r_lk);
  sum -= (positive_part(-beta(r_kl.sigma)) * qr.p_kl) * lag(r_kl);
  return sum;
}

} // namespace

std::vector<double> Grid1D::interface_positions() const {
  std::vector<double> x(n_cells() + 1);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = x_interface(j);
  return x;
}

void validate_grid(const Grid1D& grid, const EosPair& eos) {
  if (grid.n_cells() < 3) throw ConfigError("grid needs at least 3 cells");
  if (!(grid.x_max > grid.x_min)) throw ConfigError("grid needs x_max > x_min");
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    try {
      validate_cell(grid.cells[i], eos);
    } catch (const InvalidStateError& e) {
      throw InvalidStateError("cell " + std::to_string(i) + ": " + e.what());
    }
  }
}

Grid1D make_riemann_grid(double x_min, double x_max, std::size_t n_cells, double x_split,
                         const MixtureCell& left, const MixtureCell& right) {
  Grid1D grid{x_min, x_max, std::vector<MixtureCell>(n_cells)};
  for (std::size_t i = 0; i < n_cells; ++i) {
    grid.cells[i] = grid.x_center(i) < x_split ? left : right;
  }
  return grid;
}

ProbabilityQuad InterfaceFluxSet::quad_for(int k) const {
  return k == 0 ? quad : swap_phases(quad);
}

InterfaceFluxSet interface_data(const MixtureCell& left, const MixtureCell& right,
                                const EosPair& eos, double r) {
  const std::array<Primitive, 2> pl{cons_to_prim(left.phase[0].cons, eos[0]),
                                    cons_to_prim(left.phase[1].cons, eos[1])};
  const std::array<Primitive, 2> pr{cons_to_prim(right.phase[0].cons, eos[0]),
                                    cons_to_prim(right.phase[1].cons, eos[1])};
  return interface_from_primitives(pl, pr, left.phase[0].alpha, right.phase[0].alpha, eos, r);
}

Flux ensemble_flux(const InterfaceFluxSet& iface, int k) {
  const int l = 1 - k;
  const ProbabilityQuad q = iface.quad_for(k);
  const RiemannFan& kl = iface.fan[k][l];
  const RiemannFan& lk = iface.fan[l][k];
  Flux sum = q.p_kk * iface.fan[k][k].flux0;
  sum += (positive_part(beta(kl.sigma)) * q.p_kl) * kl.flux0;
  sum += (positive_part(-beta(lk.sigma)) * q.p_lk) * lk.flux0;
  return sum;
}

Flux boundary_lagrangian(const InterfaceFluxSet& left_iface, const InterfaceFluxSet& right_iface,
                         int k) {
  return boundary_sum(left_iface, right_iface, k,
                      [](const RiemannFan& fan) { return lagrangian_flux(fan); });
}

double volume_fraction_rhs(const InterfaceFluxSet& left_iface,
                           const InterfaceFluxSet& right_iface, int k) {
  // Formal substitution F = 0, U = 1: the Lagrangian flux reduces to -sigma.
  return boundary_sum(left_iface, right_iface, k,
                      [](const RiemannFan& fan) { return Flux{-fan.sigma, 0.0, 0.0}; })
      .mass;
}

std::vector<MixtureCell> apply_bc(const Grid1D& grid) {
  std::vector<MixtureCell> ext;
  ext.reserve(grid.n_cells() + 2 * kGhostCells);
  for (std::size_t g = 0; g < kGhostCells; ++g) ext.push_back(grid.cells.front());
  ext.insert(ext.end(), grid.cells.begin(), grid.cells.end());
  for (std::size_t g = 0; g < kGhostCells; ++g) ext.push_back(grid.cells.back());
  return ext;
}

double cfl_dt(const Grid1D& grid, const EosPair& eos, double cfl) {
  double smax = 0.0;
  for (const MixtureCell& cell : grid.cells) {
    for (int k = 0; k < 2; ++k) {
      const Primitive v = cons_to_prim(cell.phase[k].cons, eos[k]);
      smax = std::max(smax, std::abs(v.u) + sound_speed(eos[k], v.rho, v.p));
    }
  }
  if (!std::isfinite(smax) || !(smax > 0.0)) {
    throw SolverError("CFL: non-finite or zero maximum wave speed");
  }
  return cfl * grid.dx() / smax;
}

HyperbolicUpdate hyperbolic_update(const Grid1D& grid, const EosPair& eos,
                                   const std::vector<double>& r, double dt, int threads) {
  const std::size_t n = grid.n_cells();
  if (r.size() != n + 1) {
    throw ConfigError("regime field size does not match the number of interfaces");
  }
  const std::vector<MixtureCell> ext = apply_bc(grid);

  std::vector<std::array<Primitive, 2>> prim(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) {
    prim[i] = {cons_to_prim(ext[i].phase[0].cons, eos[0]),
               cons_to_prim(ext[i].phase[1].cons, eos[1])};
  }

  // Interface j separates cells j-1 and j, i.e. extended cells j+1 and j+2.
  std::vector<InterfaceFluxSet> iface(n + 1);
  std::vector<std::array<Flux, 2>> flux(n + 1);
  parallel_for(n + 1, threads, [&](std::size_t j) {
    const std::size_t a = j + kGhostCells - 1;
    const std::size_t b = j + kGhostCells;
    iface[j] = interface_from_primitives(prim[a], prim[b], ext[a].phase[0].alpha,
                                         ext[b].phase[0].alpha, eos, r[j]);
    flux[j] = {ensemble_flux(iface[j], 0), ensemble_flux(iface[j], 1)};
  });

  HyperbolicUpdate out;
  out.cells.resize(n);
  const double lambda = dt / grid.dx();
  parallel_for(n, threads, [&](std::size_t i) {
    for (int k = 0; k < 2; ++k) {
      const PhaseCellState& ph = grid.cells[i].phase[k];
      const Flux g = (flux[i + 1][k] - flux[i][k]) - boundary_lagrangian(iface[i], iface[i + 1], k);
      out.cells[i][k].alpha_cons = ph.alpha_cons() - lambda * g;
      out.cells[i][k].alpha = ph.alpha + lambda * volume_fraction_rhs(iface[i], iface[i + 1], k);
    }
  });
  out.boundary_flux_left = flux.front();
  out.boundary_flux_right = flux.back();
  return out;
}

Grid1D hyperbolic_step(const Grid1D& grid, const EosPair& eos, const std::vector<double>& r,
                       double dt, int threads, HyperbolicUpdate* raw) {
  HyperbolicUpdate upd = hyperbolic_update(grid, eos, r, dt, threads);
  Grid1D next{grid.x_min, grid.x_max, std::vector<MixtureCell>(grid.n_cells())};
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    for (int k = 0; k < 2; ++k) {
      const PhaseUpdate& u = upd.cells[i][k];
      const Conserved& ac = u.alpha_cons;
      next.cells[i].phase[k] = {u.alpha, {ac.mass / u.alpha, ac.momentum / u.alpha,
                                          ac.energy / u.alpha}};
    }
    try {
      validate_cell(next.cells[i], eos);
    } catch (const InvalidStateError& e) {
      std::ostringstream os;
      os.precision(17);
      os << "hyperbolic step produced an invalid state in cell " << i << " (x="
         << grid.x_center(i) << "): " << e.what();
      throw InvalidStateError(os.str());
    }
  }
  if (raw) *raw = std::move(upd);
  return next;
}

} // namespace dem
