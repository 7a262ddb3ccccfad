#pragma once

#include <string>
#include <vector>

namespace dem {

/// Volume fractions of phase k in cells i (left) and i+1 (right) of an interface.
struct AlphaPair {
  double alpha_left;
  double alpha_right;
};

/// Joint probabilities of the phase pairing across one interface.
///
/// p_ab is the probability of phase a on the left and phase b on the right,
/// where k is the reference phase and l its complement.
struct ProbabilityQuad {
  double p_kk;
  double p_kl;
  double p_lk;
  double p_ll;
  double r;
};

struct ProbabilityPair {
  double p_kk;
  double p_kl;
};

/// Stratified extremal pair (r = 0).
ProbabilityPair stratified_pair(const AlphaPair& a);

/// Disperse extremal pair (r = 1).
ProbabilityPair disperse_pair(const AlphaPair& a);

/// r P1 + (1 - r) P0 for phase k, with the phase-l entries completed by saturation.
ProbabilityQuad convex_quad(const AlphaPair& a, double r);

/// Same quad seen from the complementary phase: k and l exchange roles.
ProbabilityQuad swap_phases(const ProbabilityQuad& q);

/// Recovers r from a consistent quad; returns 0 when the admissible interval is degenerate.
double extract_r(const ProbabilityQuad& quad, const AlphaPair& a);

struct ConsistencyViolation {
  std::string condition;
  double slack;  ///< amount by which the condition is violated (positive)
};

struct ConsistencyReport {
  std::vector<ConsistencyViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks marginal sums, min/max bounds and range of every entry, with absolute tolerance tol.
ConsistencyReport check_consistency(const ProbabilityQuad& quad, const AlphaPair& a,
                                    double tol = 1e-14);

} // namespace dem
