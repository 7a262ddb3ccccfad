#pragma once

#include <string>
#include <vector>

#include "dem/config.hpp"
#include "dem/exact_riemann.hpp"
#include "dem/snapshot.hpp"

namespace dem {

enum class OracleKind { phase1, phase2, mixture };

/// Which exact solution to compare against, and the run that defines its initial data.
struct OracleSpec {
  OracleKind kind = OracleKind::phase1;
  RunConfig config;
};

/// "<kind>:<preset name or config path>", kind one of phase1, phase2, mixture.
OracleSpec parse_oracle_spec(const std::string& spec);

struct FieldError {
  std::string field;
  double l1 = 0.0;        ///< sum |q - q_exact| dx
  double linf = 0.0;      ///< max |q - q_exact|
  double l1_exact = 0.0;  ///< sum |q_exact| dx
  double relative_l1() const { return l1_exact > 0.0 ? l1 / l1_exact : l1; }
};

struct ErrorReport {
  double t = 0.0;
  std::vector<FieldError> fields;
  const FieldError& at(const std::string& field) const;
};

/// Exact Riemann solution selected by the spec (single phase, or mixture with dominant-phase EOS).
ExactRiemannSolution oracle_solution(const OracleSpec& spec);

/// L1 and L-infinity errors of the density, velocity and pressure columns against the oracle.
ErrorReport compare_oracle(const SnapshotTable& snapshot, const OracleSpec& spec);

/// L1 distance sum |a - b| dx between two equally sized profiles.
double l1_distance(const std::vector<double>& a, const std::vector<double>& b, double dx);

} // namespace dem
