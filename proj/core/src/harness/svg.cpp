#include "slicesim/harness/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace slicesim::harness {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 400;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                         "#d62728", "#9467bd", "#8c564b"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series) {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool any = false;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = y;
        any = true;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  ymin = std::min(ymin, 0.0);

  auto sx = [&](double x) {
    return kMarginLeft + (x - xmin) / (xmax - xmin) *
                             (kWidth - kMarginLeft - kMarginRight);
  };
  auto sy = [&](double y) {
    return kHeight - kMarginBottom -
           (y - ymin) / (ymax - ymin) * (kHeight - kMarginTop - kMarginBottom);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + std::to_string(kWidth / 2) +
         "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" + title +
         "</text>\n";

  // axes
  out += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop) +
         "\" x2=\"" + fmt(kMarginLeft) + "\" y2=\"" +
         fmt(kHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" +
         fmt(kHeight - kMarginBottom) + "\" x2=\"" +
         fmt(kWidth - kMarginRight) + "\" y2=\"" +
         fmt(kHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
  out += "<text x=\"" + std::to_string(kWidth / 2) + "\" y=\"" +
         std::to_string(kHeight - 12) +
         "\" text-anchor=\"middle\" font-size=\"12\">" + x_label +
         "</text>\n";
  out += "<text x=\"16\" y=\"" + std::to_string(kHeight / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 "
         "16 " +
         std::to_string(kHeight / 2) + ")\">" + y_label + "</text>\n";

  // axis extents
  out += "<text x=\"" + fmt(kMarginLeft) + "\" y=\"" +
         std::to_string(kHeight - kMarginBottom + 16) +
         "\" font-size=\"10\" text-anchor=\"middle\">" + fmt(xmin) +
         "</text>\n";
  out += "<text x=\"" + fmt(kWidth - kMarginRight) + "\" y=\"" +
         std::to_string(kHeight - kMarginBottom + 16) +
         "\" font-size=\"10\" text-anchor=\"middle\">" + fmt(xmax) +
         "</text>\n";
  out += "<text x=\"" + std::to_string(kMarginLeft - 6) + "\" y=\"" +
         fmt(sy(ymin)) + "\" font-size=\"10\" text-anchor=\"end\">" +
         fmt(ymin) + "</text>\n";
  out += "<text x=\"" + std::to_string(kMarginLeft - 6) + "\" y=\"" +
         fmt(sy(ymax) + 4) + "\" font-size=\"10\" text-anchor=\"end\">" +
         fmt(ymax) + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
    std::string points;
    for (const auto& [x, y] : series[i].points) {
      points += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    out += "<text x=\"" + std::to_string(kWidth - kMarginRight - 150) +
           "\" y=\"" + std::to_string(kMarginTop + 14 * (i + 1)) +
           "\" font-size=\"11\" fill=\"" + color + "\">" + series[i].label +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const std::string& path, const std::string& svg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << svg;
}

}  // namespace slicesim::harness
