#include "dem/relaxation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr int kMaxDampingHalvings = 30;
constexpr double kNewtonTolerance = 1e-10;

struct PhaseData {
  const EosParams* eos;
  double mass;  // alpha * rho, fixed during relaxation
  double rho0;
  double u0;
  double e0;
};

// F_k and its partial derivatives with respect to rho_k and p.
struct PhaseResidual {
  double f;
  double a;  // dF/drho
  double b;  // dF/dp
};

PhaseResidual phase_residual(const PhaseData& ph, double rho, double p, double u_star) {
  const double e = internal_energy(*ph.eos, rho, p);
  const double du2 = (u_star - ph.u0) * (u_star - ph.u0);
  PhaseResidual out{};
  out.f = 2.0 * rho * ph.rho0 * (e - ph.e0) - rho * ph.rho0 * du2 - 2.0 * p * (rho - ph.rho0);
  out.a = 2.0 * ph.rho0 * (e - ph.e0) + 2.0 * rho * ph.rho0 * de_drho(*ph.eos, rho, p) -
          ph.rho0 * du2 - 2.0 * p;
  out.b = 2.0 * rho * ph.rho0 * de_dp(*ph.eos, rho) - 2.0 * (rho - ph.rho0);
  return out;
}

// F_k is linear in rho at fixed p, so each phase density has a closed form.
double density_at(const PhaseData& ph, double p, double u_star) {
  const EosParams& e = *ph.eos;
  const double du2 = (u_star - ph.u0) * (u_star - ph.u0);
  const double num = 2.0 * ph.rho0 * (e.gamma * (p + e.pi_inf) / (e.gamma - 1.0));
  const double den = 2.0 * ph.rho0 * ph.e0 + ph.rho0 * du2 + 2.0 * p;
  return num / den;
}

bool admissible(const std::array<PhaseData, 2>& ph, double p, double u_star) {
  for (const PhaseData& k : ph) {
    if (!(p + k.eos->pi_inf > 0.0)) return false;
    const double rho = density_at(k, p, u_star);
    if (!(rho > 0.0) || !std::isfinite(rho)) return false;
  }
  return true;
}

} // namespace

std::string to_string(RelaxationMode mode) {
  switch (mode) {
    case RelaxationMode::none: return "none";
    case RelaxationMode::continuous: return "continuous";
    case RelaxationMode::projection: return "projection";
  }
  return "none";
}

RelaxationMode relaxation_mode_from_string(const std::string& name) {
  if (name == "none") return RelaxationMode::none;
  if (name == "continuous") return RelaxationMode::continuous;
  if (name == "projection") return RelaxationMode::projection;
  throw ConfigError("unknown relaxation mode '" + name + "' (none|continuous|projection)");
}

MixtureCell maxwellian(const ReducedEquilibrium& red, const EosParams& eos1,
                       const EosParams& eos2) {
  MixtureCell cell{{PhaseCellState{red.alpha1, prim_to_cons({red.rho1, red.u, red.p}, eos1)},
                    PhaseCellState{red.alpha2, prim_to_cons({red.rho2, red.u, red.p}, eos2)}}};
  validate_cell(cell, {eos1, eos2});
  return cell;
}

ReducedEquilibrium reduce(const MixtureCell& cell, const EosParams& eos1, const EosParams& eos2) {
  const Primitive v1 = cons_to_prim(cell.phase[0].cons, eos1);
  const Primitive v2 = cons_to_prim(cell.phase[1].cons, eos2);
  return {cell.phase[0].alpha, v1.rho, v1.u, v1.p, cell.phase[1].alpha, v2.rho};
}

MixtureCell relax_continuous(const MixtureCell& cell, const EosParams& eos1,
                             const EosParams& eos2, RelaxationDiagnostics* diag) {
  const Primitive v1 = cons_to_prim(cell.phase[0].cons, eos1);
  const Primitive v2 = cons_to_prim(cell.phase[1].cons, eos2);
  const std::array<PhaseData, 2> ph{
      PhaseData{&eos1, cell.phase[0].alpha * v1.rho, v1.rho, v1.u,
                internal_energy(eos1, v1.rho, v1.p)},
      PhaseData{&eos2, cell.phase[1].alpha * v2.rho, v2.rho, v2.u,
                internal_energy(eos2, v2.rho, v2.p)}};

  const double u_star = (ph[0].mass * v1.u + ph[1].mass * v2.u) / (ph[0].mass + ph[1].mass);

  // Initial guess: impedance-weighted interface pressure. The densities are kept on the
  // manifold F1 = F2 = 0, so the Newton step in p is the Schur complement of DF.
  const double z1 = v1.rho * sound_speed(eos1, v1.rho, v1.p);
  const double z2 = v2.rho * sound_speed(eos2, v2.rho, v2.p);
  double p = (z1 * v2.p + z2 * v1.p) / (z1 + z2);
  if (!admissible(ph, p, u_star)) p = std::max(v1.p, v2.p);
  double rho1 = density_at(ph[0], p, u_star);
  double rho2 = density_at(ph[1], p, u_star);

  // Each energy residual is measured against its own phase: pressure scale plus the kinetic
  // energy density dissipated by the velocity relaxation.
  const double scale1 =
      std::abs(v1.p) + eos1.gamma * eos1.pi_inf + v1.rho * (u_star - v1.u) * (u_star - v1.u);
  const double scale2 =
      std::abs(v2.p) + eos2.gamma * eos2.pi_inf + v2.rho * (u_star - v2.u) * (u_star - v2.u);
  const double p_scale = std::max(scale1, scale2);

  auto residual_norm = [&](const PhaseResidual& r1, const PhaseResidual& r2, double f3,
                           double d1, double d2) {
    return std::max({std::abs(r1.f) / (2.0 * d1 * scale1), std::abs(r2.f) / (2.0 * d2 * scale2),
                     std::abs(f3)});
  };

  {
    // Already on the equilibrium variety: keep the volume fractions and densities as they are.
    const PhaseResidual r1 = phase_residual(ph[0], v1.rho, p, u_star);
    const PhaseResidual r2 = phase_residual(ph[1], v2.rho, p, u_star);
    const double f3 = cell.phase[0].alpha + cell.phase[1].alpha - 1.0;
    const double res = residual_norm(r1, r2, f3, v1.rho, v2.rho);
    if (res < kNewtonTolerance && admissible(ph, p, u_star)) {
      const ReducedEquilibrium red{cell.phase[0].alpha, v1.rho, u_star, p, cell.phase[1].alpha,
                                   v2.rho};
      if (diag) *diag = {0, res, red};
      return maxwellian(red, eos1, eos2);
    }
  }

  int it = 1;
  double res = 0.0;
  for (;; ++it) {
    const PhaseResidual r1 = phase_residual(ph[0], rho1, p, u_star);
    const PhaseResidual r2 = phase_residual(ph[1], rho2, p, u_star);
    const double f3 = ph[0].mass / rho1 + ph[1].mass / rho2 - 1.0;
    res = residual_norm(r1, r2, f3, rho1, rho2);
    if (it > kMaxNewtonIterations) {
      std::ostringstream os;
      os.precision(17);
      os << "continuous relaxation: Newton did not converge in " << kMaxNewtonIterations
         << " iterations (residual " << res << ")";
      throw SolverError(os.str());
    }

    // Block elimination of the 3x3 system [A1 0 B1; 0 A2 B2; C1 C2 0] d = -F.
    const double c1 = -ph[0].mass / (rho1 * rho1);
    const double c2 = -ph[1].mass / (rho2 * rho2);
    const double den = c1 * r1.b / r1.a + c2 * r2.b / r2.a;
    if (r1.a == 0.0 || r2.a == 0.0 || den == 0.0 || !std::isfinite(den)) {
      throw SolverError("continuous relaxation: singular Jacobian");
    }
    const double dp = (f3 - c1 * r1.f / r1.a - c2 * r2.f / r2.a) / den;

    double lambda = 1.0;
    int halvings = 0;
    while (!admissible(ph, p + lambda * dp, u_star)) {
      if (++halvings > kMaxDampingHalvings) {
        throw SolverError("continuous relaxation: Newton step leaves the admissible region");
      }
      lambda *= 0.5;
    }
    p += lambda * dp;
    const double next1 = density_at(ph[0], p, u_star);
    const double next2 = density_at(ph[1], p, u_star);
    const double incr = std::max({std::abs(next1 - rho1) / next1, std::abs(next2 - rho2) / next2,
                                  std::abs(lambda * dp) / p_scale});
    rho1 = next1;
    rho2 = next2;
    if (incr < kNewtonTolerance) {
      const PhaseResidual q1 = phase_residual(ph[0], rho1, p, u_star);
      const PhaseResidual q2 = phase_residual(ph[1], rho2, p, u_star);
      res = residual_norm(q1, q2, ph[0].mass / rho1 + ph[1].mass / rho2 - 1.0, rho1, rho2);
      if (res < kNewtonTolerance) break;
    }
  }

  const ReducedEquilibrium red{ph[0].mass / rho1, rho1, u_star, p, ph[1].mass / rho2, rho2};
  if (diag) *diag = {it, res, red};
  return maxwellian(red, eos1, eos2);
}

PrimitiveVector primitive_vector(const MixtureCell& cell, const EosParams& eos1,
                                 const EosParams& eos2) {
  const Primitive v1 = cons_to_prim(cell.phase[0].cons, eos1);
  const Primitive v2 = cons_to_prim(cell.phase[1].cons, eos2);
  PrimitiveVector v;
  v << cell.phase[0].alpha, v1.rho, v1.u, v1.p, cell.phase[1].alpha, v2.rho, v2.u, v2.p;
  return v;
}

ProjectionMatrix projection_matrix(const PrimitiveVector& v, const EosParams& eos1,
                                   const EosParams& eos2) {
  const double a1 = v(0), r1 = v(1), a2 = v(4), r2 = v(5);
  const double c1 = sound_speed(eos1, r1, v(3));
  const double c2 = sound_speed(eos2, r2, v(7));
  const double m1 = a1 * r1;
  const double m2 = a2 * r2;
  const double d = a1 * r2 * c2 * c2 + a2 * r1 * c1 * c1;
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw SolverError("projection relaxation: degenerate impedance denominator");
  }

  ProjectionMatrix pi = ProjectionMatrix::Zero();
  pi(0, 0) = 1.0;
  pi(0, 3) = a1 * a2 / d;
  pi(0, 7) = -a1 * a2 / d;
  pi(1, 1) = 1.0;
  pi(1, 3) = -a2 * r1 / d;
  pi(1, 7) = a2 * r1 / d;
  pi(2, 2) = m1 / (m1 + m2);
  pi(2, 6) = m2 / (m1 + m2);
  pi(3, 3) = a1 * r2 * c2 * c2 / d;
  pi(3, 7) = a2 * r1 * c1 * c1 / d;
  pi(4, 3) = -a1 * a2 / d;
  pi(4, 4) = 1.0;
  pi(4, 7) = a1 * a2 / d;
  pi(5, 3) = a1 * r2 / d;
  pi(5, 5) = 1.0;
  pi(5, 7) = -a1 * r2 / d;
  return pi;
}

MixtureCell relax_projection(const MixtureCell& cell, const EosParams& eos1,
                             const EosParams& eos2, RelaxationDiagnostics* diag) {
  const PrimitiveVector v0 = primitive_vector(cell, eos1, eos2);
  const Eigen::Matrix<double, 6, 1> u = projection_matrix(v0, eos1, eos2) * v0;
  const ReducedEquilibrium red{u(0), u(1), u(2), u(3), u(4), u(5)};
  if (diag) *diag = {0, 0.0, red};
  return maxwellian(red, eos1, eos2);
}

MixtureCell relax(const MixtureCell& cell, const EosPair& eos, RelaxationMode mode,
                  RelaxationDiagnostics* diag) {
  switch (mode) {
    case RelaxationMode::continuous: return relax_continuous(cell, eos[0], eos[1], diag);
    case RelaxationMode::projection: return relax_projection(cell, eos[0], eos[1], diag);
    case RelaxationMode::none: break;
  }
  return cell;
}

} // namespace dem
