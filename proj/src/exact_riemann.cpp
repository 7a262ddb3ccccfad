#include "dem/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kIncrementTolerance = 1e-14;
constexpr double kResidualTolerance = 1e-10;

} // namespace

double ExactRiemannSolution::side_function(const Side& s, double p, double* derivative) {
  const double g = s.eos.gamma;
  const double pk = s.v.p + s.eos.pi_inf;
  const double pp = p + s.eos.pi_inf;
  if (p > s.v.p) {
    // shock branch (Rankine-Hugoniot)
    const double a = 2.0 / ((g + 1.0) * s.v.rho);
    const double b = (g - 1.0) / (g + 1.0) * pk;
    const double q = std::sqrt(a / (pp + b));
    if (derivative) *derivative = q * (1.0 - 0.5 * (p - s.v.p) / (pp + b));
    return (p - s.v.p) * q;
  }
  // rarefaction branch (isentrope)
  const double ratio = pp / pk;
  if (derivative) {
    *derivative = std::pow(ratio, -(g + 1.0) / (2.0 * g)) / (s.v.rho * s.a);
  }
  return 2.0 * s.a / (g - 1.0) * (std::pow(ratio, (g - 1.0) / (2.0 * g)) - 1.0);
}

double ExactRiemannSolution::pressure_function(double p) const {
  return side_function(left_, p, nullptr) + side_function(right_, p, nullptr) + right_.v.u -
         left_.v.u;
}

ExactRiemannSolution::ExactRiemannSolution(const Primitive& left, const Primitive& right,
                                           const EosParams& eos_left, const EosParams& eos_right)
    : left_{left, eos_left, sound_speed(eos_left, left.rho, left.p)},
      right_{right, eos_right, sound_speed(eos_right, right.rho, right.p)} {
  if (!is_admissible(eos_left, left.rho, left.p) || !is_admissible(eos_right, right.rho, right.p)) {
    throw InvalidStateError("exact Riemann solver: inadmissible input state");
  }

  // Lowest pressure admissible on both sides.
  const double p_min = -std::min(eos_left.pi_inf, eos_right.pi_inf);
  if (pressure_function(p_min) >= 0.0) {
    throw SolverError("exact Riemann solver: vacuum is generated (no admissible star pressure)");
  }

  double lo = p_min;
  double hi = std::max(left.p, right.p);
  while (pressure_function(hi) <= 0.0) {
    hi = p_min + 2.0 * (hi - p_min);
    if (!std::isfinite(hi)) throw SolverError("exact Riemann solver: cannot bracket p*");
  }

  // Initial guess: two-rarefaction estimate for a common EOS, acoustic estimate otherwise.
  double p;
  if (eos_left.gamma == eos_right.gamma && eos_left.pi_inf == eos_right.pi_inf) {
    const double g = eos_left.gamma;
    const double pi = eos_left.pi_inf;
    const double z = (g - 1.0) / (2.0 * g);
    const double num = left_.a + right_.a - 0.5 * (g - 1.0) * (right.u - left.u);
    const double den =
        left_.a / std::pow(left.p + pi, z) + right_.a / std::pow(right.p + pi, z);
    p = num > 0.0 ? std::pow(num / den, 1.0 / z) - pi : 0.5 * (lo + hi);
  } else {
    const double zl = left.rho * left_.a;
    const double zr = right.rho * right_.a;
    p = (zr * left.p + zl * right.p - zl * zr * (right.u - left.u)) / (zl + zr);
  }
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  bool converged = false;
  for (iterations_ = 1; iterations_ <= kMaxIterations; ++iterations_) {
    double dfl = 0.0;
    double dfr = 0.0;
    const double g = side_function(left_, p, &dfl) + side_function(right_, p, &dfr) + right.u -
                     left.u;
    if (g == 0.0) {
      converged = true;
      break;
    }
    if (g < 0.0) {
      lo = p;
    } else {
      hi = p;
    }
    double next = p - g / (dfl + dfr);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    const double scale = std::max(std::abs(p), std::abs(p_min)) + 1e-300;
    const bool small = std::abs(next - p) <= kIncrementTolerance * scale;
    p = next;
    if (small || hi - lo <= kIncrementTolerance * scale) {
      converged = true;
      break;
    }
  }
  p_star_ = p;
  u_star_ = 0.5 * (left.u + right.u) +
            0.5 * (side_function(right_, p, nullptr) - side_function(left_, p, nullptr));
  if (!converged || !(relative_residual() < kResidualTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "exact Riemann solver did not converge (p=" << p << ", residual="
       << relative_residual() << ")";
    throw SolverError(os.str());
  }
}

double ExactRiemannSolution::relative_residual() const {
  const double scale =
      left_.a + right_.a + std::abs(left_.v.u) + std::abs(right_.v.u);
  return std::abs(pressure_function(p_star_)) / scale;
}

// Samples the left wave family; the right family is handled by mirroring.
Primitive ExactRiemannSolution::sample_side(const Side& s, double xi, double sign) const {
  const double g = s.eos.gamma;
  const double pi = s.eos.pi_inf;
  const double u_k = sign * s.v.u;
  const double u_star = sign * u_star_;
  const double x = sign * xi;
  const double ratio = (p_star_ + pi) / (s.v.p + pi);

  Primitive out{};
  if (p_star_ > s.v.p) {
    const double shock =
        u_k - s.a * std::sqrt((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g));
    if (x < shock) {
      out = {s.v.rho, u_k, s.v.p};
    } else {
      const double g6 = (g - 1.0) / (g + 1.0);
      out = {s.v.rho * (ratio + g6) / (g6 * ratio + 1.0), u_star, p_star_};
    }
  } else {
    const double head = u_k - s.a;
    const double a_star = s.a * std::pow(ratio, (g - 1.0) / (2.0 * g));
    const double tail = u_star - a_star;
    if (x < head) {
      out = {s.v.rho, u_k, s.v.p};
    } else if (x > tail) {
      out = {s.v.rho * std::pow(ratio, 1.0 / g), u_star, p_star_};
    } else {
      const double c = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * s.a) * (u_k - x);
      out.rho = s.v.rho * std::pow(c, 2.0 / (g - 1.0));
      out.u = 2.0 / (g + 1.0) * (s.a + 0.5 * (g - 1.0) * u_k + x);
      out.p = (s.v.p + pi) * std::pow(c, 2.0 * g / (g - 1.0)) - pi;
    }
  }
  out.u *= sign;
  return out;
}

Primitive ExactRiemannSolution::sample(double xi) const {
  return xi < u_star_ ? sample_side(left_, xi, 1.0) : sample_side(right_, xi, -1.0);
}

ExactRiemannSolution exact_rp(const Primitive& left, const Primitive& right,
                              const EosParams& eos_left, const EosParams& eos_right) {
  return ExactRiemannSolution(left, right, eos_left, eos_right);
}

} // namespace dem
