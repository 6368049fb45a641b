#include "udw/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>

#include "udw/csv.hpp"

namespace udw {

namespace {

constexpr double kWidth = 760.0;
constexpr double kLeft = 80.0, kRight = 200.0, kTop = 40.0, kGap = 50.0, kBottom = 50.0;
constexpr double kMainHeight = 340.0, kSideHeight = 150.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* dasharray(LineStyle s) {
  switch (s) {
    case LineStyle::Solid: return "";
    case LineStyle::Dashed: return " stroke-dasharray=\"8,4\"";
    case LineStyle::DashDot: return " stroke-dasharray=\"8,3,2,3\"";
    case LineStyle::Dotted: return " stroke-dasharray=\"2,3\"";
  }
  return "";
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-300 * std::max(1.0, std::abs(lo))) {
      const double pad = lo == 0.0 ? 1.0 : 0.1 * std::abs(lo);
      lo -= pad;
      hi += pad;
    }
  }
};

std::vector<double> ticks(const Range& r) {
  const double raw = (r.hi - r.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  std::vector<double> out;
  for (double t = std::ceil(r.lo / step) * step; t <= r.hi + 1e-9 * step; t += step)
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  return out;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  Range xr;
  for (const Panel& p : spec.panels)
    for (const Series& s : p.series)
      for (double v : s.x) xr.add(v);
  xr.settle();

  double height = kTop;
  for (std::size_t k = 0; k < spec.panels.size(); ++k)
    height += (k + 1 == spec.panels.size() ? kMainHeight : kSideHeight) + kGap;
  height += kBottom - kGap + 10.0;

  const double plot_w = kWidth - kLeft - kRight;
  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{:.1f}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
      kWidth, height, kWidth, height, kLeft + plot_w / 2, escape(spec.title));

  double top = kTop;
  for (std::size_t k = 0; k < spec.panels.size(); ++k) {
    const Panel& panel = spec.panels[k];
    const bool last = k + 1 == spec.panels.size();
    const double h = last ? kMainHeight : kSideHeight;
    Range yr;
    for (const Series& s : panel.series)
      for (double v : s.y) yr.add(v);
    yr.settle();
    const double pad = 0.05 * (yr.hi - yr.lo);
    yr.lo -= pad;
    yr.hi += pad;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double y) { return top + h - (y - yr.lo) / (yr.hi - yr.lo) * h; };

    svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       kLeft, top, plot_w, h);
    for (double t : ticks(yr)) {
      svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#ddd\"/>\n"
                         "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.4g}</text>\n",
                         kLeft, py(t), kLeft + plot_w, py(t), kLeft - 6, py(t) + 4, t);
    }
    if (yr.lo < 0.0 && yr.hi > 0.0)
      svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#888\"/>\n",
                         kLeft, py(0.0), kLeft + plot_w, py(0.0));
    for (double t : ticks(xr)) {
      svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\"/>\n",
                         px(t), top + h, px(t), top + h + 4);
      if (last)
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.4g}</text>\n", px(t),
                           top + h + 18, t);
    }
    svg += fmt::format("<text transform=\"translate({:.1f},{:.1f}) rotate(-90)\" text-anchor=\"middle\">{}</text>\n",
                       18.0, top + h / 2, escape(panel.ylabel));

    double legend_y = top + 12;
    for (const Series& s : panel.series) {
      std::string pts;
      auto flush = [&] {
        if (pts.empty()) return;
        svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.8\"{} points=\"{}\"/>\n",
                           s.color, dasharray(s.style), pts);
        pts.clear();
      };
      for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
          flush();
          continue;
        }
        pts += fmt::format("{}{:.2f},{:.2f}", pts.empty() ? "" : " ", px(s.x[i]), py(s.y[i]));
      }
      flush();
      if (!s.label.empty()) {
        const double lx = kLeft + plot_w + 12;
        svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"{}\" "
                           "stroke-width=\"1.8\"{}/>\n"
                           "<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n",
                           lx, legend_y, lx + 28, legend_y, s.color, dasharray(s.style), lx + 34,
                           legend_y + 4, escape(s.label));
        legend_y += 16;
      }
    }
    top += h + kGap;
  }
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", kLeft + plot_w / 2,
                     top - kGap + 36, escape(spec.xlabel));
  svg += "</svg>\n";
  return svg;
}

void write_svg(const PlotSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  out << render_svg(spec);
  out.flush();
  if (!out) throw OutputError("write failed for " + path.string());
}

PlotSpec sweep_plot(const std::string& title, const std::vector<LabeledSweep>& sweeps) {
  PlotSpec spec;
  spec.title = title;
  spec.xlabel = "a";
  Panel purity{"purity", {}};
  Panel main{"variation / lambda^2", {}};
  const bool tagged = sweeps.size() > 1;
  for (std::size_t k = 0; k < sweeps.size(); ++k) {
    const SweepResult& r = *sweeps[k].result;
    const std::string color = kPalette[k % std::size(kPalette)];
    const std::string tag = tagged ? " " + sweeps[k].label : "";
    const double l2 = r.config.detector.lambda * r.config.detector.lambda;
    Series p{sweeps[k].label, {}, {}, LineStyle::Solid, color};
    Series m{"dM2~" + tag, {}, {}, LineStyle::Solid, color};
    Series c{"dC" + tag, {}, {}, LineStyle::Dashed, color};
    Series nl{"dM2_NL" + tag, {}, {}, LineStyle::DashDot, color};
    Series b{"dB0" + tag, {}, {}, LineStyle::Dotted, color};
    for (const SweepRow& w : r.rows) {
      for (Series* s : {&p, &m, &c, &nl, &b}) s->x.push_back(w.a);
      p.y.push_back(w.purity);
      m.y.push_back(w.dM2_tilde / l2);
      c.y.push_back(w.dC / l2);
      nl.y.push_back(w.dM2_NL / l2);
      b.y.push_back(w.dB0 / l2);
    }
    purity.series.push_back(std::move(p));
    for (Series* s : {&m, &c, &nl, &b}) main.series.push_back(std::move(*s));
  }
  spec.panels = {std::move(purity), std::move(main)};
  return spec;
}

PlotSpec inertial_plot(const std::string& title, const InertialStudy& study) {
  PlotSpec spec;
  spec.title = title;
  spec.xlabel = "Omega sigma";
  Panel sre{"M2~ / lambda^2", {}};
  Panel conc{"C / lambda^2", {}};
  const double l2 = study.config.detector.lambda * study.config.detector.lambda;
  const std::size_t nx = study.omega_sigma.size();
  for (std::size_t l = 0; l < study.separations.size(); ++l) {
    const std::string color = kPalette[l % std::size(kPalette)];
    const std::string tag = fmt::format("sigma/L = {:.3g}", study.config.detector.sigma / study.separations[l]);
    Series s{tag, {}, {}, LineStyle::Solid, color};
    Series c{tag, {}, {}, LineStyle::Dashed, color};
    for (std::size_t k = 0; k < nx; ++k) {
      const InertialRow& w = study.rows[l * nx + k];
      s.x.push_back(w.omega_sigma);
      c.x.push_back(w.omega_sigma);
      s.y.push_back(w.M2_tilde / l2);
      c.y.push_back(w.concurrence / l2);
    }
    sre.series.push_back(std::move(s));
    conc.series.push_back(std::move(c));
  }
  spec.panels = {std::move(conc), std::move(sre)};
  return spec;
}

void emit_plot(const SweepResult& r, const std::filesystem::path& path) {
  const std::string title = fmt::format("{} | initial {} | Omega={:g} sigma={:g} L={:g}",
                                        to_string(r.config.scenario), to_string(r.config.initial_state),
                                        r.config.detector.omega, r.config.detector.sigma, r.config.L);
  write_svg(sweep_plot(title, {{"", &r}}), path);
}

}  // namespace udw
