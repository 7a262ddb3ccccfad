#include "dem/probability.hpp"

#include <algorithm>
#include <cmath>

#include "dem/errors.hpp"

namespace dem {

ProbabilityPair stratified_pair(const AlphaPair& a) {
  return {std::min(a.alpha_left, a.alpha_right), std::max(a.alpha_left - a.alpha_right, 0.0)};
}

ProbabilityPair disperse_pair(const AlphaPair& a) {
  const double q_right = 1.0 - a.alpha_right;
  return {std::max(a.alpha_left - q_right, 0.0), std::min(a.alpha_left, q_right)};
}

ProbabilityQuad convex_quad(const AlphaPair& a, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw InvalidStateError("regime parameter r must lie in [0,1]");
  }
  const ProbabilityPair p0 = stratified_pair(a);
  const ProbabilityPair p1 = disperse_pair(a);
  ProbabilityQuad q{};
  q.r = r;
  q.p_kk = r * p1.p_kk + (1.0 - r) * p0.p_kk;
  q.p_kl = r * p1.p_kl + (1.0 - r) * p0.p_kl;
  q.p_lk = a.alpha_right - q.p_kk;
  q.p_ll = (1.0 - a.alpha_left) - q.p_lk;
  return q;
}

ProbabilityQuad swap_phases(const ProbabilityQuad& q) {
  return {q.p_ll, q.p_lk, q.p_kl, q.p_kk, q.r};
}

double extract_r(const ProbabilityQuad& quad, const AlphaPair& a) {
  const double lower = std::max(a.alpha_left - a.alpha_right, 0.0);
  const double upper = std::min(a.alpha_left, 1.0 - a.alpha_right);
  const double width = upper - lower;
  if (!(width > 0.0)) return 0.0;
  return std::clamp((quad.p_kl - lower) / width, 0.0, 1.0);
}

ConsistencyReport check_consistency(const ProbabilityQuad& q, const AlphaPair& a, double tol) {
  ConsistencyReport report;
  auto equal = [&](const char* name, double lhs, double rhs) {
    const double d = std::abs(lhs - rhs);
    if (d > tol) report.violations.push_back({name, d});
  };
  auto at_most = [&](const char* name, double lhs, double rhs) {
    if (lhs > rhs + tol) report.violations.push_back({name, lhs - rhs});
  };

  const double al = a.alpha_left;
  const double ar = a.alpha_right;
  equal("p_kk + p_kl = alpha_left", q.p_kk + q.p_kl, al);
  equal("p_kk + p_lk = alpha_right", q.p_kk + q.p_lk, ar);
  equal("p_ll + p_lk = 1 - alpha_left", q.p_ll + q.p_lk, 1.0 - al);
  equal("p_ll + p_kl = 1 - alpha_right", q.p_ll + q.p_kl, 1.0 - ar);
  equal("sum = 1", q.p_kk + q.p_kl + q.p_lk + q.p_ll, 1.0);

  // Bounds for both phase perspectives.
  at_most("p_kk >= max(alpha_left - (1 - alpha_right), 0)", std::max(al - (1.0 - ar), 0.0),
          q.p_kk);
  at_most("p_kk <= min(alpha_left, alpha_right)", q.p_kk, std::min(al, ar));
  at_most("p_kl >= max(alpha_left - alpha_right, 0)", std::max(al - ar, 0.0), q.p_kl);
  at_most("p_kl <= min(alpha_left, 1 - alpha_right)", q.p_kl, std::min(al, 1.0 - ar));
  at_most("p_ll >= max((1 - alpha_left) - alpha_right, 0)", std::max((1.0 - al) - ar, 0.0),
          q.p_ll);
  at_most("p_ll <= min(1 - alpha_left, 1 - alpha_right)", q.p_ll, std::min(1.0 - al, 1.0 - ar));
  at_most("p_lk >= max(alpha_right - alpha_left, 0)", std::max(ar - al, 0.0), q.p_lk);
  at_most("p_lk <= min(1 - alpha_left, alpha_right)", q.p_lk, std::min(1.0 - al, ar));

  const double entries[] = {q.p_kk, q.p_kl, q.p_lk, q.p_ll};
  for (double e : entries) {
    at_most("entry >= 0", 0.0, e);
    at_most("entry <= 1", e, 1.0);
  }
  return report;
}

} // namespace dem
