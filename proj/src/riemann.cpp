#include "dem/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

namespace {

// Star state of side K (Toro's HLLC formula, independent of the EOS).
Conserved star_state(const Primitive& v, const Conserved& c, double s_k, double s_star) {
  const double factor = v.rho * (s_k - v.u) / (s_k - s_star);
  const double e_tot = c.energy / v.rho + (s_star - v.u) * (s_star + v.p / (v.rho * (s_k - v.u)));
  return {factor, factor * s_star, factor * e_tot};
}

} // namespace

RiemannFan hllc(const Primitive& left, const Primitive& right, const EosParams& eos_left,
                const EosParams& eos_right) {
  const Conserved cl = prim_to_cons(left, eos_left);
  const Conserved cr = prim_to_cons(right, eos_right);
  const double al = sound_speed(eos_left, left.rho, left.p);
  const double ar = sound_speed(eos_right, right.rho, right.p);

  // STEP 1: outer wave speeds
  const double sl = std::min(left.u - al, right.u - ar);
  const double sr = std::max(left.u + al, right.u + ar);
  if (!(sl < sr)) {
    throw SolverError("HLLC breakdown: wave speed estimates cross");
  }

  // STEP 2: contact speed and star pressure
  const double ml = left.rho * (sl - left.u);
  const double mr = right.rho * (sr - right.u);
  const double s_star = (right.p - left.p + ml * left.u - mr * right.u) / (ml - mr);
  const double p_star = left.p + ml * (s_star - left.u);
  if (!(s_star >= sl && s_star <= sr) || !std::isfinite(p_star)) {
    std::ostringstream os;
    os.precision(17);
    os << "HLLC breakdown: contact speed " << s_star << " outside [" << sl << ", " << sr << "]";
    throw SolverError(os.str());
  }

  // STEP 3: star states and the flux at x/t = 0
  const Conserved usl = star_state(left, cl, sl, s_star);
  const Conserved usr = star_state(right, cr, sr, s_star);
  const Flux fl{cl.momentum, cl.momentum * left.u + left.p, left.u * (cl.energy + left.p)};
  const Flux fr{cr.momentum, cr.momentum * right.u + right.p, right.u * (cr.energy + right.p)};

  RiemannFan fan{};
  fan.sigma = s_star;
  fan.p_star = p_star;
  fan.s_left = sl;
  fan.s_right = sr;
  fan.u_star_left = usl;
  fan.u_star_right = usr;
  if (sl >= 0.0) {
    fan.flux0 = fl;
    fan.u_star0 = cl;
  } else if (s_star >= 0.0) {
    fan.flux0 = fl + sl * (usl - cl);
    fan.u_star0 = usl;
  } else if (sr > 0.0) {
    fan.flux0 = fr + sr * (usr - cr);
    fan.u_star0 = usr;
  } else {
    fan.flux0 = fr;
    fan.u_star0 = cr;
  }
  return fan;
}

Flux lagrangian_flux(const RiemannFan& fan) {
  return {0.0, fan.p_star, fan.p_star * fan.sigma};
}

AcousticInterface interfacial_decomposition(const Primitive& left, const Primitive& right,
                                            double z_left, double z_right) {
  const double zsum = z_left + z_right;
  if (!(zsum > 0.0)) {
    throw InvalidStateError("acoustic impedances must have a positive sum");
  }
  AcousticInterface out{};
  out.sigma_symmetric = (z_left * left.u + z_right * right.u) / zsum;
  out.sigma_antisymmetric = (right.p - left.p) / zsum;
  out.p_symmetric = (z_right * left.p + z_left * right.p) / zsum;
  out.p_antisymmetric = z_left * z_right * (right.u - left.u) / zsum;
  out.sigma = out.sigma_symmetric - out.sigma_antisymmetric;
  out.p_star = out.p_symmetric - out.p_antisymmetric;
  return out;
}

} // namespace dem
