#pragma once

namespace dem {

/// Stiffened-gas parameters: p = (gamma - 1) rho e - gamma pi_inf.
struct EosParams {
  double gamma;
  double pi_inf;
};

/// Validated constructor; throws InvalidStateError unless gamma > 1 and pi_inf >= 0.
EosParams make_eos(double gamma, double pi_inf);

/// Specific internal energy e(rho, p).
double internal_energy(const EosParams& eos, double rho, double p);

/// Pressure from density and specific internal energy.
double pressure_from_energy(const EosParams& eos, double rho, double e);

/// Sound speed sqrt(gamma (p + pi_inf) / rho).
double sound_speed(const EosParams& eos, double rho, double p);

/// Partial derivative of e with respect to rho at fixed p.
double de_drho(const EosParams& eos, double rho, double p);

/// Partial derivative of e with respect to p at fixed rho.
double de_dp(const EosParams& eos, double rho);

/// True when rho > 0 and p + pi_inf > 0.
bool is_admissible(const EosParams& eos, double rho, double p) noexcept;

} // namespace dem
