#pragma once

#include <string>
#include <utility>
#include <vector>

namespace slicesim::harness {

/// One polyline in a chart.
struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Minimal SVG line chart: axes, one polyline per series, legend. CSV is
/// the contract; these charts are a convenience behind --svg.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series);

void write_svg(const std::string& path, const std::string& svg);

}  // namespace slicesim::harness
