// File: include/tnd/svg.hpp
//
// Minimal deterministic SVG line plots: axes with tick labels, one
// polyline per series, optional dashed vertical markers, and a legend.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tnd {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f6fb2";
  bool dashed = false;
};

struct SvgMarker {
  double x = 0.0;
  std::string label;
  std::string color = "#888888";
};

struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 460;
  std::vector<SvgSeries> series;
  std::vector<SvgMarker> markers;  // dashed vertical lines
};

// Renders the plot; throws AnalysisError when there is nothing finite
// to draw. Output bytes depend only on the spec.
std::string render_svg(const SvgPlot& plot);
void write_svg(const std::filesystem::path& path, const SvgPlot& plot);

// Evenly spaced mode colors for the suite plots.
std::string series_color(std::size_t index);

}  // namespace tnd
