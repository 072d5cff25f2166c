#pragma once

#include <string>
#include <utility>
#include <vector>

namespace diskspan {

struct PlotSeries {
    std::string label;
    std::string color = "#1f6fb2";
    std::vector<std::pair<double, double>> points;
};

/// Static SVG scatter/line plot, optionally with log10 axes. Returns
/// the SVG document text.
std::string render_plot_svg(const std::string& title, const std::string& xlabel,
                            const std::string& ylabel,
                            const std::vector<PlotSeries>& series, bool log_x,
                            bool log_y);

}  // namespace diskspan
