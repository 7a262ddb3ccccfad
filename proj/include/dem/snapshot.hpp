#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dem/simulation.hpp"

namespace dem {

/// Column names of every snapshot file, in order.
inline const std::array<std::string, 12> kSnapshotColumns = {
    "x",  "alpha1", "rho1",    "u1",    "p1",    "rho2",
    "u2", "p2",     "rho_mix", "u_mix", "p_mix", "r_left_interface"};

/// Snapshot in tabular form: "# key=value" metadata plus one row per cell.
struct SnapshotTable {
  std::map<std::string, std::string> meta;
  std::vector<std::array<double, 12>> rows;

  std::vector<double> column(const std::string& name) const;
  double meta_double(const std::string& key) const;
};

/// Run description written to the header.
struct SnapshotMeta {
  std::uint64_t seed = 0;
  double cfl = 0.9;
  std::string relaxation = "none";
  std::string regime = "constant:0";
  std::string preset;
};

SnapshotTable to_table(const Snapshot& snap, const EosPair& eos, const SnapshotMeta& meta);

/// CSV text with 17 significant digits per value.
std::string format_snapshot(const SnapshotTable& table);

SnapshotTable parse_snapshot(const std::string& text);

void write_snapshot(const std::string& path, const SnapshotTable& table);
SnapshotTable read_snapshot(const std::string& path);

} // namespace dem
