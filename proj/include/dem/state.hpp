#pragma once

#include <array>

#include "dem/eos.hpp"

namespace dem {

/// Volume-fraction floor used for nearly pure initial data.
inline constexpr double kVolumeFractionFloor = 1e-6;

/// Tolerance on alpha1 + alpha2 = 1.
inline constexpr double kSaturationTolerance = 1e-12;

struct Primitive {
  double rho;
  double u;
  double p;
};

/// Conserved vector [rho, rho u, rho E]. Also used for fluxes, which share its layout.
struct Conserved {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;

  Conserved& operator+=(const Conserved& o) {
    mass += o.mass;
    momentum += o.momentum;
    energy += o.energy;
    return *this;
  }
  Conserved& operator-=(const Conserved& o) {
    mass -= o.mass;
    momentum -= o.momentum;
    energy -= o.energy;
    return *this;
  }
  Conserved& operator*=(double s) {
    mass *= s;
    momentum *= s;
    energy *= s;
    return *this;
  }
};

inline Conserved operator+(Conserved a, const Conserved& b) { return a += b; }
inline Conserved operator-(Conserved a, const Conserved& b) { return a -= b; }
inline Conserved operator*(double s, Conserved a) { return a *= s; }
inline Conserved operator*(Conserved a, double s) { return a *= s; }

using Flux = Conserved;

/// One phase inside a cell: its volume fraction and its own (intrinsic) conserved state.
struct PhaseCellState {
  double alpha;
  Conserved cons;

  /// The stored cell quantity alpha * U.
  Conserved alpha_cons() const { return alpha * cons; }
};

struct MixtureCell {
  std::array<PhaseCellState, 2> phase;
};

using EosPair = std::array<EosParams, 2>;

struct MixtureQuantities {
  double rho;
  double u;
  double p;
};

Conserved prim_to_cons(const Primitive& v, const EosParams& eos);
Primitive cons_to_prim(const Conserved& c, const EosParams& eos);

/// Physical Euler flux [rho u, rho u^2 + p, u (rho E + p)].
Flux physical_flux(const Primitive& v, const EosParams& eos);

/// Builds a cell from per-phase (alpha, primitive) data. Throws InvalidStateError on bad input.
MixtureCell make_cell(double alpha1, const Primitive& v1, double alpha2, const Primitive& v2,
                      const EosPair& eos);

/// Throws InvalidStateError unless both fractions lie in (0,1) and saturate,
/// and both phases are admissible.
void validate_cell(const MixtureCell& cell, const EosPair& eos);

MixtureQuantities mixture_quantities(const MixtureCell& cell, const EosParams& eos1,
                                     const EosParams& eos2);

} // namespace dem
