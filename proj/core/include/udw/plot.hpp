#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "udw/sweep.hpp"

namespace udw {

enum class LineStyle { Solid, Dashed, DashDot, Dotted };

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;  // NaN points break the line
  LineStyle style = LineStyle::Solid;
  std::string color = "#1f77b4";
};

struct Panel {
  std::string ylabel;
  std::vector<Series> series;
};

struct PlotSpec {
  std::string title;
  std::string xlabel;
  std::vector<Panel> panels;  // stacked top to bottom; the last one is the main panel
};

std::string render_svg(const PlotSpec& spec);
// Throws OutputError when the file cannot be written.
void write_svg(const PlotSpec& spec, const std::filesystem::path& path);

struct LabeledSweep {
  std::string label;
  const SweepResult* result = nullptr;
};

// Purity on top; lambda^2-normalized dM2~ (solid), dC (dashed), dM2_NL (dash-dot)
// and dB0 (dotted) below, one colour per sweep.
PlotSpec sweep_plot(const std::string& title, const std::vector<LabeledSweep>& sweeps);

// M2~ (solid) and concurrence (dashed), lambda^2-normalized, against omega*sigma,
// one colour per separation.
PlotSpec inertial_plot(const std::string& title, const InertialStudy& study);

void emit_plot(const SweepResult& r, const std::filesystem::path& path);

}  // namespace udw
