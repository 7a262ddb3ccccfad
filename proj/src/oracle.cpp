#include "dem/oracle.hpp"

#include <cmath>
#include <filesystem>

#include "dem/errors.hpp"

namespace dem {

namespace {

Primitive side_mixture(const std::array<PhaseInit, 2>& st) {
  const double rho = st[0].alpha * st[0].rho + st[1].alpha * st[1].rho;
  const double u = (st[0].alpha * st[0].rho * st[0].u + st[1].alpha * st[1].rho * st[1].u) / rho;
  return {rho, u, st[0].alpha * st[0].p + st[1].alpha * st[1].p};
}

const EosParams& dominant_eos(const RunConfig& c, const std::array<PhaseInit, 2>& st) {
  return st[0].alpha >= st[1].alpha ? c.eos[0] : c.eos[1];
}

} // namespace

OracleSpec parse_oracle_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("oracle spec must read <phase1|phase2|mixture>:<preset or config path>");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string source = spec.substr(colon + 1);
  OracleSpec out;
  if (kind == "phase1") out.kind = OracleKind::phase1;
  else if (kind == "phase2") out.kind = OracleKind::phase2;
  else if (kind == "mixture") out.kind = OracleKind::mixture;
  else throw ConfigError("unknown oracle kind '" + kind + "'");
  out.config = std::filesystem::exists(source) ? load_config(source) : preset(source);
  return out;
}

const FieldError& ErrorReport::at(const std::string& field) const {
  for (const FieldError& f : fields) {
    if (f.field == field) return f;
  }
  throw ConfigError("error report has no field '" + field + "'");
}

ExactRiemannSolution oracle_solution(const OracleSpec& spec) {
  const RunConfig& c = spec.config;
  if (spec.kind == OracleKind::mixture) {
    return exact_rp(side_mixture(c.left), side_mixture(c.right), dominant_eos(c, c.left),
                    dominant_eos(c, c.right));
  }
  const int k = spec.kind == OracleKind::phase1 ? 0 : 1;
  return exact_rp({c.left[k].rho, c.left[k].u, c.left[k].p},
                  {c.right[k].rho, c.right[k].u, c.right[k].p}, c.eos[k], c.eos[k]);
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b, double dx) {
  if (a.size() != b.size()) throw ConfigError("profiles differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum * dx;
}

ErrorReport compare_oracle(const SnapshotTable& snapshot, const OracleSpec& spec) {
  const RunConfig& c = spec.config;
  const std::size_t n = snapshot.rows.size();
  if (n == 0) throw ConfigError("snapshot has no rows");
  const double x_min = snapshot.meta_double("x_min");
  const double x_max = snapshot.meta_double("x_max");
  const double tol = 1e-12 * (std::abs(c.x_max) + std::abs(c.x_min));
  if (std::abs(x_min - c.x_min) > tol || std::abs(x_max - c.x_max) > tol) {
    throw ConfigError("snapshot domain does not match the oracle configuration");
  }
  const double dx = (x_max - x_min) / static_cast<double>(n);
  const double t = snapshot.meta_double("t");

  const ExactRiemannSolution exact = oracle_solution(spec);
  std::array<std::string, 3> names;
  if (spec.kind == OracleKind::mixture) {
    names = {"rho_mix", "u_mix", "p_mix"};
  } else {
    const std::string k = spec.kind == OracleKind::phase1 ? "1" : "2";
    names = {"rho" + k, "u" + k, "p" + k};
  }

  ErrorReport report;
  report.t = t;
  const std::vector<double> x = snapshot.column("x");
  for (int f = 0; f < 3; ++f) {
    const std::vector<double> q = snapshot.column(names[f]);
    FieldError err{names[f]};
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = t > 0.0 ? (x[i] - c.x_split) / t
                                : (x[i] < c.x_split ? -INFINITY : INFINITY);
      const Primitive e = exact.sample(xi);
      const double qe = f == 0 ? e.rho : (f == 1 ? e.u : e.p);
      const double d = std::abs(q[i] - qe);
      err.l1 += d * dx;
      err.l1_exact += std::abs(qe) * dx;
      err.linf = std::max(err.linf, d);
    }
    report.fields.push_back(err);
  }
  return report;
}

} // namespace dem
