#include "udw/presets.hpp"

#include <fmt/format.h>

#include "udw/csv.hpp"
#include "udw/plot.hpp"

namespace udw {

namespace {

SweepConfig with(const SweepConfig& base, Scenario sc, InitialKind init, double omega, double sigma, double L) {
  SweepConfig c = base;
  c.scenario = sc;
  c.initial_state = init;
  c.detector.omega = omega;
  c.detector.sigma = sigma;
  c.L = L;
  return c;
}

std::string initial_title(InitialKind k) {
  switch (k) {
    case InitialKind::ZeroZero: return "|00>";
    case InitialKind::BellPhiPlus: return "|Phi+>";
    case InitialKind::ZeroT: return "|0>|T>";
    default: return "custom";
  }
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2",  "fig3a", "fig3b", "fig4a", "fig4b", "fig4c",
                                                 "fig5a", "fig5b", "fig6a", "fig6b", "fig6c", "fig7a",
                                                 "fig7b", "fig7c"};
  return names;
}

Preset make_preset(const std::string& name, const SweepConfig& base) {
  Preset p;
  p.name = name;
  p.base = base;
  if (name == "fig2") {
    p.title = "inertial |00>: SRE and concurrence vs Omega sigma";
    p.inertial = true;
    return p;
  }
  if (name == "fig3a" || name == "fig5a") {
    const InitialKind k = name == "fig3a" ? InitialKind::ZeroZero : InitialKind::BellPhiPlus;
    p.title = "parallel " + initial_title(k) + ", sigma=1, L=1";
    for (double om : {1.0, 2.0, 3.0})
      p.runs.push_back({fmt::format("omega{:g}", om), with(base, Scenario::Parallel, k, om, 1.0, 1.0)});
    return p;
  }
  if (name == "fig3b" || name == "fig5b") {
    const InitialKind k = name == "fig3b" ? InitialKind::ZeroZero : InitialKind::BellPhiPlus;
    p.title = "parallel " + initial_title(k) + ", Omega=2, sigma=1";
    for (double L : {1.0, 2.0, 5.0})
      p.runs.push_back({fmt::format("L{:g}", L), with(base, Scenario::Parallel, k, 2.0, 1.0, L)});
    return p;
  }
  if (name.size() == 5 && name.starts_with("fig") && (name[3] == '4' || name[3] == '6' || name[3] == '7') &&
      name[4] >= 'a' && name[4] <= 'c') {
    const Scenario sc = name[3] == '4'   ? Scenario::Parallel
                        : name[3] == '6' ? Scenario::Antiparallel
                                         : Scenario::Perpendicular;
    const InitialKind k = name[4] == 'a'   ? InitialKind::ZeroZero
                          : name[4] == 'b' ? InitialKind::BellPhiPlus
                                           : InitialKind::ZeroT;
    p.title = std::string(to_string(sc)) + " " + initial_title(k) + ", Omega=2, sigma=1, L=0.5";
    p.runs.push_back({"", with(base, sc, k, 2.0, 1.0, 0.5)});
    return p;
  }
  throw ConfigError("unknown figure preset '" + name + "'");
}

PresetOutput run_preset(const Preset& preset, int workers, const std::filesystem::path& outdir) {
  PresetOutput out;
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw OutputError("cannot create " + outdir.string() + ": " + ec.message());
  auto csv_path = [&](const std::string& label) {
    return outdir / (label.empty() ? preset.name + ".csv" : preset.name + "_" + label + ".csv");
  };
  const std::filesystem::path svg = outdir / (preset.name + ".svg");

  if (preset.inertial) {
    out.inertial = run_inertial_study(preset.base, workers);
    emit_csv(to_table(*out.inertial), csv_path(""));
    write_svg(inertial_plot(preset.title, *out.inertial), svg);
    out.files = {csv_path(""), svg};
    return out;
  }
  std::vector<LabeledSweep> labeled;
  for (const PresetRun& run : preset.runs) {
    out.sweeps.push_back(run_sweep(run.config, workers));
    emit_csv(out.sweeps.back(), csv_path(run.label));
    out.files.push_back(csv_path(run.label));
  }
  for (std::size_t k = 0; k < preset.runs.size(); ++k) labeled.push_back({preset.runs[k].label, &out.sweeps[k]});
  write_svg(sweep_plot(preset.title, labeled), svg);
  out.files.push_back(svg);
  return out;
}

}  // namespace udw
