#include "dem/state.hpp"

#include <cmath>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

Conserved prim_to_cons(const Primitive& v, const EosParams& eos) {
  if (!is_admissible(eos, v.rho, v.p)) {
    std::ostringstream os;
    os.precision(17);
    os << "inadmissible primitive state (rho=" << v.rho << ", p=" << v.p << ")";
    throw InvalidStateError(os.str());
  }
  const double e = internal_energy(eos, v.rho, v.p);
  return {v.rho, v.rho * v.u, v.rho * (e + 0.5 * v.u * v.u)};
}

Primitive cons_to_prim(const Conserved& c, const EosParams& eos) {
  if (!(c.mass > 0.0) || !std::isfinite(c.mass)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-positive mass in conserved state (mass=" << c.mass << ")";
    throw InvalidStateError(os.str());
  }
  const double u = c.momentum / c.mass;
  const double e = c.energy / c.mass - 0.5 * u * u;
  const double p = pressure_from_energy(eos, c.mass, e);
  if (!is_admissible(eos, c.mass, p)) {
    std::ostringstream os;
    os.precision(17);
    os << "inadmissible pressure from conserved state (rho=" << c.mass << ", e=" << e
       << ", p=" << p << ")";
    throw InvalidStateError(os.str());
  }
  return {c.mass, u, p};
}

Flux physical_flux(const Primitive& v, const EosParams& eos) {
  const Conserved c = prim_to_cons(v, eos);
  return {c.momentum, c.momentum * v.u + v.p, v.u * (c.energy + v.p)};
}

MixtureCell make_cell(double alpha1, const Primitive& v1, double alpha2, const Primitive& v2,
                      const EosPair& eos) {
  const std::array<Primitive, 2> v{v1, v2};
  const std::array<double, 2> alpha{alpha1, alpha2};
  MixtureCell cell{};
  for (int k = 0; k < 2; ++k) {
    try {
      cell.phase[k] = {alpha[k], prim_to_cons(v[k], eos[k])};
    } catch (const InvalidStateError& e) {
      throw InvalidStateError("phase " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  validate_cell(cell, eos);
  return cell;
}

void validate_cell(const MixtureCell& cell, const EosPair& eos) {
  for (int k = 0; k < 2; ++k) {
    const double a = cell.phase[k].alpha;
    if (!(a > 0.0 && a < 1.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "volume fraction of phase " << k + 1 << " outside (0,1): " << a;
      throw InvalidStateError(os.str());
    }
    try {
      cons_to_prim(cell.phase[k].cons, eos[k]);
    } catch (const InvalidStateError& e) {
      throw InvalidStateError("phase " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  const double sat = cell.phase[0].alpha + cell.phase[1].alpha - 1.0;
  if (!(std::abs(sat) <= kSaturationTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "saturation violated: alpha1 + alpha2 - 1 = " << sat;
    throw InvalidStateError(os.str());
  }
}

MixtureQuantities mixture_quantities(const MixtureCell& cell, const EosParams& eos1,
                                     const EosParams& eos2) {
  const Primitive v1 = cons_to_prim(cell.phase[0].cons, eos1);
  const Primitive v2 = cons_to_prim(cell.phase[1].cons, eos2);
  const double a1 = cell.phase[0].alpha;
  const double a2 = cell.phase[1].alpha;
  const double rho = a1 * v1.rho + a2 * v2.rho;
  const double u = (a1 * v1.rho * v1.u + a2 * v2.rho * v2.u) / rho;
  return {rho, u, a1 * v1.p + a2 * v2.p};
}

} // namespace dem
