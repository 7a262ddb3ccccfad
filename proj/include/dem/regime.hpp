#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace dem {

struct ConstantRegime {
  double r = 0.0;
};

/// r(x) = values[j] on [breakpoints[j-1], breakpoints[j]).
/// values has one more entry than breakpoints.
struct PiecewiseRegime {
  std::vector<double> breakpoints;
  std::vector<double> values;
};

/// r <- clamp(r + epsilon q), q uniform on [-1, 1), drawn per interface and step.
struct StochasticRegime {
  double epsilon = 0.0;
  double r0 = 0.0;
  std::uint64_t seed = 0;
};

/// Fresh r ~ U[0,1) per interface and step.
struct UniformRandomRegime {
  std::uint64_t seed = 0;
};

using RegimePolicy = std::variant<ConstantRegime, PiecewiseRegime, StochasticRegime,
                                  UniformRandomRegime>;

/// Algorithm identifier written to output metadata.
inline constexpr const char* kRngAlgorithm = "mt19937_64";

/// Piecewise profile used for the spatially varying regime experiment.
PiecewiseRegime reference_piecewise_regime();

/// Human-readable policy description, e.g. "constant:0.5".
std::string describe(const RegimePolicy& policy);

/// Regime parameter on every interface x_{i+1/2}, i = -1 .. n_cells-1.
class RegimeField {
public:
  RegimeField() = default;

  /// values.size() == n_interfaces; the policy decides how the field evolves.
  RegimeField(RegimePolicy policy, std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }
  const RegimePolicy& policy() const { return policy_; }

  /// True when r is constant in time (constant or piecewise policy).
  bool is_static() const;

  /// Advances the field by one time step; a no-op for static policies.
  void advance();

private:
  RegimePolicy policy_;
  std::vector<double> values_;
  std::mt19937_64 rng_;
};

/// Samples the policy at the given interface positions.
RegimeField init_field(const RegimePolicy& policy, const std::vector<double>& interface_x,
                       double x_min, double x_max);

/// One stochastic step: r_j <- clamp(r_j + epsilon (2 U - 1)).
/// Consumes one draw per interface, in order.
void stochastic_update(std::vector<double>& values, double epsilon, std::mt19937_64& rng);

/// Uniform double in [0,1) built from the top 53 bits, identical on every platform.
double uniform01(std::mt19937_64& rng);

} // namespace dem
