#pragma once

#include "dem/eos.hpp"
#include "dem/state.hpp"

namespace dem {

/// Exact self-similar solution of a Riemann problem between two stiffened gases.
///
/// Each side uses its own (gamma, pi_inf) in the shock and rarefaction branches;
/// the two materials meet at a contact moving with u_star.
class ExactRiemannSolution {
public:
  ExactRiemannSolution(const Primitive& left, const Primitive& right, const EosParams& eos_left,
                       const EosParams& eos_right);

  /// Primitive state at xi = x / t.
  Primitive sample(double xi) const;

  /// True when xi falls on the left material, i.e. xi < u_star.
  bool is_left_material(double xi) const { return xi < u_star_; }

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }
  int iterations() const { return iterations_; }

  /// Residual of the pressure equation at p_star, scaled by the velocity scale of the data.
  double relative_residual() const;

  /// Value of f_L(p) + f_R(p) + u_R - u_L.
  double pressure_function(double p) const;

private:
  struct Side {
    Primitive v;
    EosParams eos;
    double a;
  };
  static double side_function(const Side& s, double p, double* derivative);
  Primitive sample_side(const Side& s, double xi, double sign) const;

  Side left_;
  Side right_;
  double p_star_ = 0.0;
  double u_star_ = 0.0;
  int iterations_ = 0;
};

/// Convenience wrapper mirroring the other solvers.
ExactRiemannSolution exact_rp(const Primitive& left, const Primitive& right,
                              const EosParams& eos_left, const EosParams& eos_right);

} // namespace dem
