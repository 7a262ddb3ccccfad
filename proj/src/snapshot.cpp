#include "dem/snapshot.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dem/errors.hpp"
#include "dem/regime.hpp"

namespace dem {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Header keys written first, in this order.
const std::vector<std::string> kMetaOrder = {"t",      "n_cells",    "x_min",  "x_max",
                                             "seed",   "rng",        "cfl",    "relaxation",
                                             "regime", "preset"};

} // namespace

std::vector<double> SnapshotTable::column(const std::string& name) const {
  const auto it = std::find(kSnapshotColumns.begin(), kSnapshotColumns.end(), name);
  if (it == kSnapshotColumns.end()) throw ConfigError("unknown snapshot column '" + name + "'");
  const auto idx = static_cast<std::size_t>(it - kSnapshotColumns.begin());
  std::vector<double> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i][idx];
  return out;
}

double SnapshotTable::meta_double(const std::string& key) const {
  const auto it = meta.find(key);
  if (it == meta.end()) throw ConfigError("snapshot header lacks '" + key + "'");
  double v = 0.0;
  const std::string& s = it->second;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("snapshot header '" + key + "' is not a number");
  }
  return v;
}

SnapshotTable to_table(const Snapshot& snap, const EosPair& eos, const SnapshotMeta& meta) {
  SnapshotTable table;
  const Grid1D& g = snap.grid;
  table.meta["t"] = fmt17(snap.t);
  table.meta["n_cells"] = std::to_string(g.n_cells());
  table.meta["x_min"] = fmt17(g.x_min);
  table.meta["x_max"] = fmt17(g.x_max);
  table.meta["seed"] = std::to_string(meta.seed);
  table.meta["rng"] = kRngAlgorithm;
  table.meta["cfl"] = fmt17(meta.cfl);
  table.meta["relaxation"] = meta.relaxation;
  table.meta["regime"] = meta.regime;
  if (!meta.preset.empty()) table.meta["preset"] = meta.preset;

  table.rows.resize(g.n_cells());
  for (std::size_t i = 0; i < g.n_cells(); ++i) {
    const MixtureCell& c = g.cells[i];
    const Primitive v1 = cons_to_prim(c.phase[0].cons, eos[0]);
    const Primitive v2 = cons_to_prim(c.phase[1].cons, eos[1]);
    const MixtureQuantities m = mixture_quantities(c, eos[0], eos[1]);
    const double r = i < snap.r.size() ? snap.r[i] : 0.0;
    table.rows[i] = {g.x_center(i), c.phase[0].alpha, v1.rho, v1.u, v1.p, v2.rho, v2.u, v2.p,
                     m.rho, m.u, m.p, r};
  }
  return table;
}

std::string format_snapshot(const SnapshotTable& table) {
  std::ostringstream os;
  for (const std::string& key : kMetaOrder) {
    const auto it = table.meta.find(key);
    if (it != table.meta.end()) os << "# " << key << '=' << it->second << '\n';
  }
  for (const auto& [key, value] : table.meta) {
    if (std::find(kMetaOrder.begin(), kMetaOrder.end(), key) == kMetaOrder.end()) {
      os << "# " << key << '=' << value << '\n';
    }
  }
  for (std::size_t j = 0; j < kSnapshotColumns.size(); ++j) {
    os << (j ? "," : "") << kSnapshotColumns[j];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << fmt17(row[j]);
    os << '\n';
  }
  return os.str();
}

SnapshotTable parse_snapshot(const std::string& text) {
  SnapshotTable table;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      table.meta[key] = line.substr(eq + 1);
      continue;
    }
    if (!header_seen) {
      std::string expected;
      for (std::size_t j = 0; j < kSnapshotColumns.size(); ++j) {
        expected += (j ? "," : "") + kSnapshotColumns[j];
      }
      if (line != expected) throw ConfigError("unexpected snapshot column header", lineno);
      header_seen = true;
      continue;
    }
    std::array<double, 12> row{};
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto res = std::from_chars(p, end, row[j]);
      if (res.ec != std::errc()) throw ConfigError("malformed snapshot value", lineno);
      p = res.ptr;
      if (j + 1 < row.size()) {
        if (p == end || *p != ',') throw ConfigError("snapshot row needs 12 columns", lineno);
        ++p;
      }
    }
    if (p != end) throw ConfigError("snapshot row has extra data", lineno);
    table.rows.push_back(row);
  }
  if (!header_seen) throw ConfigError("snapshot lacks a column header");
  return table;
}

void write_snapshot(const std::string& path, const SnapshotTable& table) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << format_snapshot(table);
  if (!out) throw Error("failed writing '" + path + "'");
}

SnapshotTable read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open snapshot '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_snapshot(os.str());
}

} // namespace dem
