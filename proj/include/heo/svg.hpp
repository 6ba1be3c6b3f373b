#pragma once

// Minimal self-contained SVG line-chart writer for the sweep plots. Axes,
// ticks, legend and one polyline per series; non-finite points split the
// polyline. No external assets.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heo {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

namespace detail {

inline double nice_tick_step(double range, int target_ticks) {
  if (!(range > 0.0)) return 1.0;
  const double raw = range / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step = 10.0;
  if (norm <= 1.0) step = 1.0;
  else if (norm <= 2.0) step = 2.0;
  else if (norm <= 5.0) step = 5.0;
  return step * mag;
}

inline std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace detail

inline void write_line_plot(std::ostream& out, const std::string& title,
                            const std::string& x_label, const std::string& y_label,
                            std::span<const PlotSeries> series) {
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  const double width = 860, height = 540;
  const double left = 80, right = 640, top = 50, bottom = 480;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      xmin = std::min(xmin, x); xmax = std::max(xmax, x);
      ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
  }
  const bool have_data = std::isfinite(xmin) && std::isfinite(ymin);
  if (!have_data) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
  if (xmax == xmin) { xmin -= 0.5; xmax += 0.5; }
  if (ymax == ymin) { ymin -= 1.0; ymax += 1.0; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad; ymax += ypad;

  const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (right - left); };
  const auto py = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // gridlines and tick labels
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  const double xstep = detail::nice_tick_step(xmax - xmin, 6);
  for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-12 * xstep; t += xstep) {
    const double gx = px(t);
    out << "<line x1=\"" << gx << "\" y1=\"" << top << "\" x2=\"" << gx << "\" y2=\"" << bottom
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << gx << "\" y=\"" << bottom + 16 << "\" text-anchor=\"middle\">"
        << detail::tick_label(t) << "</text>\n";
  }
  const double ystep = detail::nice_tick_step(ymax - ymin, 6);
  for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-12 * ystep; t += ystep) {
    const double gy = py(t);
    out << "<line x1=\"" << left << "\" y1=\"" << gy << "\" x2=\"" << right << "\" y2=\"" << gy
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << gy + 4 << "\" text-anchor=\"end\">"
        << detail::tick_label(t) << "</text>\n";
  }
  out << "</g>\n";

  // axes
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left
      << "\" height=\"" << bottom - top << "\" fill=\"none\" stroke=\"#333\"/>\n";
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << bottom + 38
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
      << "</text>\n";
  out << "<text x=\"20\" y=\"" << (top + bottom) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 20 " << (top + bottom) / 2 << ")\">" << y_label << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* colour = kPalette[si % std::size(kPalette)];
    std::vector<std::pair<double, double>> segment;
    std::size_t finite_points = 0;
    const auto flush = [&] {
      if (segment.size() >= 2) {
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [x, y] : segment) out << px(x) << ',' << py(y) << ' ';
        out << "\"/>\n";
      }
      segment.clear();
    };
    for (const auto& [x, y] : series[si].points) {
      if (std::isfinite(x) && std::isfinite(y)) {
        segment.emplace_back(x, y);
        ++finite_points;
      } else {
        flush();
      }
    }
    flush();
    if (finite_points > 0 && finite_points < 3) {
      // too few points for a visible line; mark them
      for (const auto& [x, y] : series[si].points)
        if (std::isfinite(x) && std::isfinite(y))
          out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\""
              << colour << "\"/>\n";
    }
  }

  // legend
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  double ly = top + 10;
  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* colour = kPalette[si % std::size(kPalette)];
    out << "<line x1=\"" << right + 14 << "\" y1=\"" << ly << "\" x2=\"" << right + 40
        << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << right + 46 << "\" y=\"" << ly + 4 << "\">" << series[si].label
        << "</text>\n";
    ly += 20;
  }
  out << "</g>\n";
  if (!have_data)
    out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << (top + bottom) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "fill=\"#999\">no finite data points</text>\n";
  out << "</svg>\n";
}

}  // namespace heo
