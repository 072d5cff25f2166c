#include "diskspan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace diskspan {

namespace {

double transform(double v, bool log_scale) {
    return log_scale ? std::log10(std::max(v, 1e-300)) : v;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_plot_svg(const std::string& title, const std::string& xlabel,
                            const std::string& ylabel,
                            const std::vector<PlotSeries>& series, bool log_x,
                            bool log_y) {
    const double w = 640, h = 440;
    const double ml = 70, mr = 25, mt = 45, mb = 55;

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const PlotSeries& s : series) {
        for (const auto& [px, py] : s.points) {
            const double tx = transform(px, log_x), ty = transform(py, log_y);
            x0 = std::min(x0, tx);
            x1 = std::max(x1, tx);
            y0 = std::min(y0, ty);
            y1 = std::max(y1, ty);
        }
    }
    if (x0 > x1) { x0 = 0; x1 = 1; }
    if (y0 > y1) { y0 = 0; y1 = 1; }
    if (x1 - x0 < 1e-12) { x0 -= 0.5; x1 += 0.5; }
    if (y1 - y0 < 1e-12) { y0 -= 0.5; y1 += 0.5; }
    const double padx = 0.05 * (x1 - x0), pady = 0.05 * (y1 - y0);
    x0 -= padx; x1 += padx; y0 -= pady; y1 += pady;

    auto sx = [&](double v) {
        return ml + (transform(v, log_x) - x0) / (x1 - x0) * (w - ml - mr);
    };
    auto sy = [&](double v) {
        return h - mb - (transform(v, log_y) - y0) / (y1 - y0) * (h - mt - mb);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) +
           "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(w / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

    // Axes with 5 ticks each.
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(h - mb) + "\" x2=\"" +
           num(w - mr) + "\" y2=\"" + num(h - mb) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) +
           "\" y2=\"" + num(h - mb) + "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double fx = x0 + (x1 - x0) * t / 4.0;
        const double fy = y0 + (y1 - y0) * t / 4.0;
        const double px = ml + (w - ml - mr) * t / 4.0;
        const double py = h - mb - (h - mt - mb) * t / 4.0;
        const double vx = log_x ? std::pow(10.0, fx) : fx;
        const double vy = log_y ? std::pow(10.0, fy) : fy;
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(h - mb) + "\" x2=\"" +
               num(px) + "\" y2=\"" + num(h - mb + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px) + "\" y=\"" + num(h - mb + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">" + num(vx) + "</text>\n";
        svg += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(py) + "\" x2=\"" +
               num(ml) + "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">" + num(vy) + "</text>\n";
    }
    svg += "<text x=\"" + num((ml + w - mr) / 2) + "\" y=\"" + num(h - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">" + xlabel + (log_x ? " (log)" : "") + "</text>\n";
    svg += "<text x=\"18\" y=\"" + num((mt + h - mb) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + num((mt + h - mb) / 2) + ")\">" +
           ylabel + (log_y ? " (log)" : "") + "</text>\n";

    double legend_y = mt + 6;
    for (const PlotSeries& s : series) {
        std::string path;
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            path += (i == 0 ? "M" : "L");
            path += num(sx(s.points[i].first)) + " " + num(sy(s.points[i].second));
        }
        if (s.points.size() > 1)
            svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + s.color +
                   "\" stroke-width=\"1.5\"/>\n";
        for (const auto& [px, py] : s.points)
            svg += "<circle cx=\"" + num(sx(px)) + "\" cy=\"" + num(sy(py)) +
                   "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
        svg += "<text x=\"" + num(w - mr - 6) + "\" y=\"" + num(legend_y) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
               "fill=\"" + s.color + "\">" + s.label + "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace diskspan
