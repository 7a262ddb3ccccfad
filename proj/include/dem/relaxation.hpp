#pragma once

#include <string>

#include <Eigen/Dense>

#include "dem/state.hpp"

namespace dem {

enum class RelaxationMode { none, continuous, projection };

std::string to_string(RelaxationMode mode);
RelaxationMode relaxation_mode_from_string(const std::string& name);

/// Reduced variables on the equilibrium variety: one velocity and one pressure.
struct ReducedEquilibrium {
  double alpha1;
  double rho1;
  double u;
  double p;
  double alpha2;
  double rho2;
};

/// Rebuilds both phases with the shared (u, p). Throws InvalidStateError on inadmissible output.
MixtureCell maxwellian(const ReducedEquilibrium& red, const EosParams& eos1,
                       const EosParams& eos2);

/// Reduced variables of a cell, taking u and p from phase 1.
ReducedEquilibrium reduce(const MixtureCell& cell, const EosParams& eos1, const EosParams& eos2);

struct RelaxationDiagnostics {
  int iterations = 0;
  double residual = 0.0;
  ReducedEquilibrium state{};
};

/// Infinite-drag equilibrium from the Newton solve on (rho1, rho2, p).
MixtureCell relax_continuous(const MixtureCell& cell, const EosParams& eos1,
                             const EosParams& eos2, RelaxationDiagnostics* diag = nullptr);

using PrimitiveVector = Eigen::Matrix<double, 8, 1>;
using ProjectionMatrix = Eigen::Matrix<double, 6, 8>;

/// (alpha1, rho1, u1, p1, alpha2, rho2, u2, p2).
PrimitiveVector primitive_vector(const MixtureCell& cell, const EosParams& eos1,
                                 const EosParams& eos2);

/// Projection onto the equilibrium variety, linearized at the primitive state v.
ProjectionMatrix projection_matrix(const PrimitiveVector& v, const EosParams& eos1,
                                   const EosParams& eos2);

/// Equilibrium from u = Pi V0, rebuilt through the Maxwellian.
MixtureCell relax_projection(const MixtureCell& cell, const EosParams& eos1,
                             const EosParams& eos2, RelaxationDiagnostics* diag = nullptr);

/// Dispatches on mode; RelaxationMode::none returns the cell unchanged.
MixtureCell relax(const MixtureCell& cell, const EosPair& eos, RelaxationMode mode,
                  RelaxationDiagnostics* diag = nullptr);

} // namespace dem
