#include "dem/eos.hpp"

#include <cmath>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

namespace {

[[noreturn]] void fail(const char* what, double rho, double p) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (rho=" << rho << ", p=" << p << ")";
  throw InvalidStateError(os.str());
}

} // namespace

EosParams make_eos(double gamma, double pi_inf) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw InvalidStateError("stiffened gas requires gamma > 1");
  }
  if (!(pi_inf >= 0.0) || !std::isfinite(pi_inf)) {
    throw InvalidStateError("stiffened gas requires pi_inf >= 0");
  }
  return {gamma, pi_inf};
}

double internal_energy(const EosParams& eos, double rho, double p) {
  if (!(rho > 0.0)) fail("non-positive density", rho, p);
  const double num = p + eos.gamma * eos.pi_inf;
  if (!(num > 0.0)) fail("p + gamma*pi_inf must be positive", rho, p);
  return num / ((eos.gamma - 1.0) * rho);
}

double pressure_from_energy(const EosParams& eos, double rho, double e) {
  if (!(rho > 0.0)) fail("non-positive density", rho, e);
  return (eos.gamma - 1.0) * rho * e - eos.gamma * eos.pi_inf;
}

double sound_speed(const EosParams& eos, double rho, double p) {
  if (!(rho > 0.0)) fail("non-positive density", rho, p);
  const double c2 = eos.gamma * (p + eos.pi_inf) / rho;
  if (!(c2 > 0.0)) fail("negative squared sound speed", rho, p);
  return std::sqrt(c2);
}

double de_drho(const EosParams& eos, double rho, double p) {
  if (!(rho > 0.0)) fail("non-positive density", rho, p);
  return -(p + eos.gamma * eos.pi_inf) / ((eos.gamma - 1.0) * rho * rho);
}

double de_dp(const EosParams& eos, double rho) {
  if (!(rho > 0.0)) fail("non-positive density", rho, 0.0);
  return 1.0 / ((eos.gamma - 1.0) * rho);
}

bool is_admissible(const EosParams& eos, double rho, double p) noexcept {
  return rho > 0.0 && p + eos.pi_inf > 0.0 && std::isfinite(rho) && std::isfinite(p);
}

} // namespace dem
