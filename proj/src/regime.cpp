#include "dem/regime.hpp"

#include <algorithm>
#include <sstream>

#include "dem/errors.hpp"

namespace dem {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_unit(double r, const char* what) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw ConfigError(std::string(what) + " must lie in [0,1]");
  }
}

} // namespace

PiecewiseRegime reference_piecewise_regime() {
  return {{-0.52, 0.395, 0.761}, {0.13, 0.47, 1.0, 0.69}};
}

std::string describe(const RegimePolicy& policy) {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const ConstantRegime& c) { os << "constant:" << c.r; },
                 [&](const PiecewiseRegime& p) {
                   os << "piecewise:";
                   for (std::size_t j = 0; j < p.values.size(); ++j) {
                     if (j > 0) os << '|' << p.breakpoints[j - 1] << '|';
                     os << p.values[j];
                   }
                 },
                 [&](const StochasticRegime& s) {
                   os << "stochastic:eps=" << s.epsilon << ",r0=" << s.r0;
                 },
                 [&](const UniformRandomRegime&) { os << "uniform_random"; },
             },
             policy);
  return os.str();
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void stochastic_update(std::vector<double>& values, double epsilon, std::mt19937_64& rng) {
  for (double& r : values) {
    const double q = 2.0 * uniform01(rng) - 1.0;
    r = std::clamp(r + epsilon * q, 0.0, 1.0);
  }
}

RegimeField::RegimeField(RegimePolicy policy, std::vector<double> values)
    : policy_(std::move(policy)), values_(std::move(values)) {
  if (const auto* s = std::get_if<StochasticRegime>(&policy_)) rng_.seed(s->seed);
  if (const auto* u = std::get_if<UniformRandomRegime>(&policy_)) {
    rng_.seed(u->seed);
    for (double& r : values_) r = uniform01(rng_);
  }
}

bool RegimeField::is_static() const {
  return std::holds_alternative<ConstantRegime>(policy_) ||
         std::holds_alternative<PiecewiseRegime>(policy_);
}

void RegimeField::advance() {
  if (const auto* s = std::get_if<StochasticRegime>(&policy_)) {
    stochastic_update(values_, s->epsilon, rng_);
  } else if (std::holds_alternative<UniformRandomRegime>(policy_)) {
    for (double& r : values_) r = uniform01(rng_);
  }
}

RegimeField init_field(const RegimePolicy& policy, const std::vector<double>& interface_x,
                       double x_min, double x_max) {
  std::vector<double> values(interface_x.size(), 0.0);
  std::visit(overloaded{
                 [&](const ConstantRegime& c) {
                   check_unit(c.r, "constant r");
                   std::fill(values.begin(), values.end(), c.r);
                 },
                 [&](const PiecewiseRegime& p) {
                   if (p.values.size() != p.breakpoints.size() + 1) {
                     throw ConfigError("piecewise regime needs one more value than breakpoints");
                   }
                   for (std::size_t j = 0; j < p.breakpoints.size(); ++j) {
                     if (p.breakpoints[j] < x_min || p.breakpoints[j] > x_max) {
                       throw ConfigError("piecewise regime breakpoint outside the domain");
                     }
                     if (j > 0 && !(p.breakpoints[j] > p.breakpoints[j - 1])) {
                       throw ConfigError("piecewise regime breakpoints must increase");
                     }
                   }
                   for (double v : p.values) check_unit(v, "piecewise r value");
                   for (std::size_t i = 0; i < interface_x.size(); ++i) {
                     const auto it = std::upper_bound(p.breakpoints.begin(), p.breakpoints.end(),
                                                      interface_x[i]);
                     values[i] = p.values[static_cast<std::size_t>(it - p.breakpoints.begin())];
                   }
                 },
                 [&](const StochasticRegime& s) {
                   check_unit(s.r0, "initial stochastic r");
                   if (!(s.epsilon >= 0.0)) throw ConfigError("epsilon must be non-negative");
                   std::fill(values.begin(), values.end(), s.r0);
                 },
                 [&](const UniformRandomRegime&) {},
             },
             policy);
  return RegimeField(policy, std::move(values));
}

} // namespace dem
