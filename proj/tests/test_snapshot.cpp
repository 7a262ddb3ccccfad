#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "dem/config.hpp"
#include "dem/errors.hpp"
#include "dem/snapshot.hpp"

using namespace dem;

namespace {

Snapshot short_run(std::uint64_t seed) {
  RunConfig c = preset("t6_dense_to_dilute");
  c.n_cells = 60;
  c.t_end = 5e-6;
  c.epsilon = 1e-2;
  c.seed = seed;
  return run(make_setup(c)).back();
}

SnapshotMeta meta_for(std::uint64_t seed) {
  SnapshotMeta m;
  m.seed = seed;
  m.relaxation = "continuous";
  m.regime = "stochastic";
  m.preset = "t6_dense_to_dilute";
  return m;
}

} // namespace

TEST(Snapshot, UniformGridGivesConstantColumns) {
  const MixtureCell cell = make_cell(0.3, {50.0, 2.0, 1e6}, 0.7, {1000.0, 2.0, 1e6},
                                     {EosParams{1.4, 0.0}, EosParams{4.4, 6e8}});
  Snapshot snap{0.0, make_riemann_grid(0.0, 1.0, 8, 0.5, cell, cell),
                std::vector<double>(9, 0.25)};
  const SnapshotTable t = to_table(snap, {EosParams{1.4, 0.0}, EosParams{4.4, 6e8}}, {});
  ASSERT_EQ(t.rows.size(), 8u);
  for (const std::string& name : kSnapshotColumns) {
    if (name == "x") continue;
    const std::vector<double> col = t.column(name);
    for (double v : col) EXPECT_EQ(v, col[0]) << name;
  }
  EXPECT_EQ(t.column("alpha1")[0], 0.3);
  EXPECT_EQ(t.column("r_left_interface")[3], 0.25);
  EXPECT_DOUBLE_EQ(t.column("rho_mix")[0], 0.3 * 50.0 + 0.7 * 1000.0);
  EXPECT_DOUBLE_EQ(t.column("x")[0], 1.0 / 16.0);
}

TEST(Snapshot, TextRoundTripIsBitExact) {
  const EosPair eos{EosParams{1.4, 0.0}, EosParams{4.4, 6e8}};
  const SnapshotTable t = to_table(short_run(9), eos, meta_for(9));
  const std::string text = format_snapshot(t);
  const SnapshotTable back = parse_snapshot(text);
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < 12; ++j) ASSERT_EQ(back.rows[i][j], t.rows[i][j]);
  }
  EXPECT_EQ(back.meta, t.meta);
  EXPECT_EQ(format_snapshot(back), text);
}

TEST(Snapshot, HeaderAndSchema) {
  const EosPair eos{EosParams{1.4, 0.0}, EosParams{4.4, 6e8}};
  const std::string text = format_snapshot(to_table(short_run(3), eos, meta_for(3)));
  EXPECT_EQ(text.rfind("# t=5.0000000000000004e-06\n# n_cells=60\n", 0), 0u);
  for (const char* key : {"# seed=3\n", "# cfl=0.90000000000000002\n", "# relaxation=continuous\n",
                          "# regime=stochastic\n", "# rng=mt19937_64\n"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  EXPECT_NE(text.find("\nx,alpha1,rho1,u1,p1,rho2,u2,p2,rho_mix,u_mix,p_mix,r_left_interface\n"),
            std::string::npos);
  // Every data row has exactly 12 fields.
  const SnapshotTable t = parse_snapshot(text);
  EXPECT_EQ(t.rows.size(), 60u);
  EXPECT_EQ(kSnapshotColumns.size(), 12u);
}

TEST(Snapshot, SameSeedSameBytes) {
  const EosPair eos{EosParams{1.4, 0.0}, EosParams{4.4, 6e8}};
  EXPECT_EQ(format_snapshot(to_table(short_run(5), eos, meta_for(5))),
            format_snapshot(to_table(short_run(5), eos, meta_for(5))));
  EXPECT_NE(format_snapshot(to_table(short_run(5), eos, meta_for(5))),
            format_snapshot(to_table(short_run(6), eos, meta_for(5))));
}

TEST(Snapshot, MalformedInputReportsLine) {
  const std::string header =
      "# t=0\nx,alpha1,rho1,u1,p1,rho2,u2,p2,rho_mix,u_mix,p_mix,r_left_interface\n";
  auto line_of = [](const std::string& text) {
    try {
      parse_snapshot(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of(header + "1,2,3\n"), 3);
  EXPECT_EQ(line_of(header + "1,2,3,4,5,6,7,8,9,10,11,12\n1,2,3,4,5,6,7,8,9,10,11,x\n"), 4);
  EXPECT_EQ(line_of(header + "1,2,3,4,5,6,7,8,9,10,11,12,13\n"), 3);
  EXPECT_EQ(line_of("# t=0\nx,y\n"), 2);
  EXPECT_EQ(line_of(header + "1,2,3,4,5,6,7,8,9,10,11,12\n"), -1);
}

TEST(Snapshot, FileRoundTrip) {
  const EosPair eos{EosParams{1.4, 0.0}, EosParams{4.4, 6e8}};
  const SnapshotTable t = to_table(short_run(1), eos, meta_for(1));
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "dem_snapshot_roundtrip.csv";
  write_snapshot(path.string(), t);
  const SnapshotTable back = read_snapshot(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_EQ(back.meta_double("t"), 5e-6);
  EXPECT_THROW(back.meta_double("relaxation"), ConfigError);
  EXPECT_THROW(read_snapshot((path.parent_path() / "no_such_dir" / "x.csv").string()), Error);
  EXPECT_THROW(write_snapshot((path.parent_path() / "no_such_dir" / "x.csv").string(), t), Error);
}
