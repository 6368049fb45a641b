#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "udw/csv.hpp"
#include "udw/plot.hpp"
#include "udw/presets.hpp"
#include "udw/sweep.hpp"

using namespace udw;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.a_grid = {0.5, 2.0};
  c.nonlocal_starts = 8;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "udw_runner_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Config, DefaultsMatchTheStudySetup) {
  const SweepConfig c;
  EXPECT_EQ(c.scenario, Scenario::Parallel);
  EXPECT_EQ(c.initial_state, InitialKind::ZeroZero);
  EXPECT_DOUBLE_EQ(c.detector.omega, 2.0);
  EXPECT_DOUBLE_EQ(c.detector.sigma, 1.0);
  EXPECT_DOUBLE_EQ(c.detector.lambda, 0.1);
  EXPECT_DOUBLE_EQ(c.L, 0.5);
  ASSERT_EQ(c.a_grid.size(), 40u);
  EXPECT_DOUBLE_EQ(c.a_grid.front(), 0.0);
  EXPECT_DOUBLE_EQ(c.a_grid.back(), 4.0);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, JsonOverridesAndRoundTrip) {
  SweepConfig c;
  apply_json(c, nlohmann::json::parse(R"({"scenario": "perpendicular", "initial_state": "0T", "omega": 1.5,
      "a_grid": {"min": 0, "max": 2, "points": 5}, "quadrature": {"rel_tol": 1e-5},
      "seed": 7, "positivity": "raw", "outputs": {"csv": "x.csv"}})"));
  EXPECT_EQ(c.scenario, Scenario::Perpendicular);
  EXPECT_EQ(c.initial_state, InitialKind::ZeroT);
  EXPECT_DOUBLE_EQ(c.detector.omega, 1.5);
  EXPECT_EQ(c.a_grid, (std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}));
  EXPECT_DOUBLE_EQ(c.quadrature.rel_tol, 1e-5);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.positivity, PositivityMode::Raw);
  EXPECT_EQ(c.outputs.csv, "x.csv");
  SweepConfig d;
  apply_json(d, to_json(c));
  EXPECT_EQ(to_json(d), to_json(c));
}

TEST(Config, RejectsBadInput) {
  SweepConfig c;
  EXPECT_THROW(apply_json(c, nlohmann::json::parse(R"({"omgea": 2})")), ConfigError);
  EXPECT_THROW(apply_json(c, nlohmann::json::parse(R"({"scenario": "sideways"})")), ConfigError);
  EXPECT_THROW(apply_json(c, nlohmann::json::parse(R"({"omega": "two"})")), ConfigError);
  c.a_grid = {1.0, 0.5};
  EXPECT_THROW(c.validate(), ConfigError);
  c.a_grid = {};
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.a_grid = {-1.0};
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.detector.sigma = 0.0;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/udw.json"), ConfigError);
}

TEST(Csv, DecimalFormatting) {
  EXPECT_EQ(format_decimal(0.0), "0");
  EXPECT_EQ(format_decimal(1.0), "1.00000000000");
  EXPECT_EQ(format_decimal(-2.5), "-2.50000000000");
  EXPECT_EQ(format_decimal(0.000123456789012345), "0.000123456789012");
  EXPECT_EQ(format_decimal(12345.678901234567), "12345.6789012");
  EXPECT_EQ(format_decimal(1.5e13), "15000000000000");
  EXPECT_EQ(format_decimal(std::nan("")), "nan");
  EXPECT_EQ(format_decimal(-INFINITY), "-inf");
}

TEST(Csv, QuotingAndRoundTrip) {
  Table t;
  t.header = {"name", "value"};
  t.rows.push_back({std::string("a,b"), 3.14159265358979});
  t.rows.push_back({std::string("say \"hi\"\nnow"), -1e-7});
  std::stringstream ss;
  write_csv(t, ss);
  EXPECT_NE(ss.str().find("\"a,b\""), std::string::npos);
  EXPECT_NE(ss.str().find("\r\n"), std::string::npos);
  const auto rows = read_csv(ss);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][0], "a,b");
  EXPECT_EQ(rows[2][0], "say \"hi\"\nnow");
  EXPECT_NEAR(std::stod(rows[1][1]) / 3.14159265358979, 1.0, 5e-12);
  EXPECT_NEAR(std::stod(rows[2][1]) / -1e-7, 1.0, 5e-12);
}

TEST(Csv, EmptySweepIsHeaderOnly) {
  SweepResult r;
  std::stringstream ss;
  write_csv(to_table(r), ss);
  const auto rows = read_csv(ss);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], sweep_header());
  EXPECT_EQ(std::vector<std::string>(rows[0].begin(), rows[0].begin() + 14),
            (std::vector<std::string>{"a", "PA", "PB", "abs_M", "concurrence", "dC", "M2_tilde", "dM2_tilde",
                                      "M2_NL", "dM2_NL", "bell_b0", "dB0", "purity",
                                      "quadrature_error_estimate"}));
}

TEST(Csv, UnwritablePathThrows) {
  EXPECT_THROW(emit_csv(Table{{"a"}, {}}, "/nonexistent/dir/out.csv"), OutputError);
}

TEST(Sweep, DeltaColumnsAndDeterminism) {
  SweepConfig c = small_config();
  c.initial_state = InitialKind::ZeroT;
  const SweepResult r = run_sweep(c);
  ASSERT_EQ(r.rows.size(), 2u);
  const InitialValues init = table1_reference(InitialKind::ZeroT);
  for (const SweepRow& w : r.rows) {
    EXPECT_EQ(w.status, "ok");
    EXPECT_DOUBLE_EQ(w.dC, w.concurrence - init.concurrence);
    EXPECT_DOUBLE_EQ(w.dM2_tilde, w.M2_tilde - init.M2_tilde);
    EXPECT_DOUBLE_EQ(w.dB0, w.bell_b0 - init.bell_b0);
    EXPECT_DOUBLE_EQ(w.dM2_NL, w.M2_NL - init.M2_NL);
    EXPECT_GT(w.purity, 0.99);
  }
  const auto p1 = scratch("det1.csv"), p2 = scratch("det2.csv");
  emit_csv(r, p1);
  emit_csv(run_sweep(c, 2), p2);
  EXPECT_EQ(slurp(p1), slurp(p2));
}

TEST(Sweep, RowsAreIndependentOfGridOrder) {
  SweepConfig c = small_config();
  c.a_grid = {2.0};
  const SweepResult single = run_sweep(c);
  const SweepResult both = run_sweep(small_config());
  EXPECT_DOUBLE_EQ(single.rows[0].PA, both.rows[1].PA);
  EXPECT_DOUBLE_EQ(single.rows[0].M2_NL, both.rows[1].M2_NL);
}

TEST(Sweep, SharedCorrelatorsAcrossStates) {
  const SweepConfig c = small_config();
  const auto rs = run_sweep_states(c, {InitialKind::ZeroZero, InitialKind::BellPhiPlus});
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[1].config.initial_state, InitialKind::BellPhiPlus);
  EXPECT_DOUBLE_EQ(rs[0].rows[0].PA, rs[1].rows[0].PA);
  SweepConfig b = c;
  b.initial_state = InitialKind::BellPhiPlus;
  EXPECT_DOUBLE_EQ(run_sweep(b).rows[0].bell_b0, rs[1].rows[0].bell_b0);
}

TEST(Table1, ReproducesReferenceValues) {
  for (const Table1Row& r : run_table1()) {
    EXPECT_NEAR(r.computed.M2_tilde, r.reference.M2_tilde, 1e-10);
    EXPECT_NEAR(r.computed.concurrence, r.reference.concurrence, 1e-10);
    EXPECT_NEAR(r.computed.bell_b0, r.reference.bell_b0, 1e-10);
    EXPECT_NEAR(r.computed.M2_NL, r.reference.M2_NL, 1e-6);
  }
}

TEST(InertialStudy, ClosedFormColumns) {
  const InertialStudy s = run_inertial_study(SweepConfig{}, 1, {0.5, 2.0}, {0.5, 2.0});
  ASSERT_EQ(s.rows.size(), 4u);
  for (const InertialRow& w : s.rows) {
    EXPECT_NEAR(w.PA / w.PA_closed, 1.0, 1e-4);
    EXPECT_NEAR(w.absM / w.absM_closed, 1.0, 1e-3);
  }
  // second order: L-independent; the exact state picks up O(lambda^4) |M|^2 terms
  EXPECT_NEAR(s.rows[0].M2_tilde_pert, s.rows[2].M2_tilde_pert, 1e-12);
  EXPECT_NEAR(s.rows[0].M2_tilde_pert / s.rows[0].M2_tilde_closed, 1.0, 1e-4);
  EXPECT_NEAR(s.rows[0].M2_tilde, s.rows[2].M2_tilde, 1e-4);
  EXPECT_GT(s.rows[0].M2_tilde, s.rows[1].M2_tilde);
  EXPECT_NE(s.rows[0].concurrence, s.rows[2].concurrence);
}

TEST(Plot, SvgHasOneLineStylePerQuantity) {
  const SweepResult r = run_sweep(small_config());
  const std::string svg = render_svg(sweep_plot("test", {{"", &r}}));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("stroke-dasharray=\"8,4\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray=\"8,3,2,3\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray=\"2,3\""), std::string::npos);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const auto path = scratch("plot.svg");
  emit_plot(r, path);
  EXPECT_GT(std::filesystem::file_size(path), 500u);
}

TEST(Presets, AllNamesResolve) {
  const SweepConfig base;
  for (const std::string& n : preset_names()) {
    const Preset p = make_preset(n, base);
    EXPECT_EQ(p.inertial, n == "fig2");
    if (!p.inertial) EXPECT_FALSE(p.runs.empty());
    for (const PresetRun& run : p.runs) EXPECT_NO_THROW(run.config.validate());
  }
  EXPECT_EQ(make_preset("fig6b", base).runs[0].config.scenario, Scenario::Antiparallel);
  EXPECT_EQ(make_preset("fig6b", base).runs[0].config.initial_state, InitialKind::BellPhiPlus);
  EXPECT_EQ(make_preset("fig5a", base).runs.size(), 3u);
  EXPECT_THROW(make_preset("fig9", base), ConfigError);
}

TEST(Presets, RunWritesCsvAndSvg) {
  SweepConfig base = small_config();
  base.a_grid = {1.0};
  const auto dir = scratch("preset");
  const PresetOutput out = run_preset(make_preset("fig7c", base), 1, dir);
  ASSERT_EQ(out.files.size(), 2u);
  for (const auto& f : out.files) EXPECT_TRUE(std::filesystem::exists(f)) << f;
}
