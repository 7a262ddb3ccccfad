#pragma once

#include "dem/eos.hpp"
#include "dem/state.hpp"

namespace dem {

/// Approximate solution of one Riemann problem, sampled along x/t = 0.
struct RiemannFan {
  Flux flux0;         ///< Godunov flux at x/t = 0
  double sigma;       ///< contact speed
  double p_star;      ///< star-region pressure
  Conserved u_star0;  ///< Godunov state at x/t = 0
  double s_left;
  double s_right;
  Conserved u_star_left;   ///< star state on the left of the contact
  Conserved u_star_right;  ///< star state on the right of the contact
};

/// HLLC solver with Davis wave speed estimates and a separate stiffened gas on each side.
RiemannFan hllc(const Primitive& left, const Primitive& right, const EosParams& eos_left,
                const EosParams& eos_right);

/// p* [0, 1, sigma]: the star-region value of F - sigma U.
Flux lagrangian_flux(const RiemannFan& fan);

struct AcousticInterface {
  double sigma;
  double p_star;
  double sigma_symmetric;      ///< (Z_L u_L + Z_R u_R) / (Z_L + Z_R)
  double sigma_antisymmetric;  ///< (p_R - p_L) / (Z_L + Z_R)
  double p_symmetric;          ///< (Z_R p_L + Z_L p_R) / (Z_L + Z_R)
  double p_antisymmetric;      ///< Z_L Z_R (u_R - u_L) / (Z_L + Z_R)
};

/// Linearized (acoustic) interface velocity and pressure for impedances z_left, z_right.
AcousticInterface interfacial_decomposition(const Primitive& left, const Primitive& right,
                                            double z_left, double z_right);

} // namespace dem
