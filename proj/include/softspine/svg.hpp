#ifndef SOFTSPINE_SVG_HPP
#define SOFTSPINE_SVG_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "softspine/errors.hpp"
#include "softspine/text.hpp"

// Minimal standalone SVG writer: one polyline per data series, axes box,
// y up. Everything is inline XML, no external references.

namespace softspine {

struct SvgSeries {
    std::vector<std::pair<double, double>> points;  // data units
    std::string label;
};

inline std::string polyline_svg(const std::vector<SvgSeries>& series, int width = 480,
                                int height = 480) {
    if (series.empty()) throw DomainError("polyline_svg: no series");
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (first) throw DomainError("polyline_svg: no points");
    double spanx = xmax - xmin, spany = ymax - ymin;
    if (spanx <= 0) spanx = 1.0;
    if (spany <= 0) spany = 1.0;
    const double margin = 40.0;
    double sx = (width - 2 * margin) / spanx;
    double sy = (height - 2 * margin) / spany;

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf"};
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
    int color = 0;
    for (const auto& s : series) {
        out += "  <polyline fill=\"none\" stroke=\"";
        out += palette[color % 7];
        out += "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < s.points.size(); ++i) {
            auto [x, y] = s.points[i];
            double px = margin + (x - xmin) * sx;
            double py = height - margin - (y - ymin) * sy;
            if (i) out += ' ';
            out += fmt_sig4(px);
            out += ',';
            out += fmt_sig4(py);
        }
        out += "\"/>\n";
        if (!s.label.empty()) {
            auto [x, y] = s.points.back();
            double px = margin + (x - xmin) * sx;
            double py = height - margin - (y - ymin) * sy;
            out += "  <text x=\"" + fmt_sig4(px + 4) + "\" y=\"" + fmt_sig4(py) +
                   "\" font-size=\"10\" fill=\"#333333\">" + s.label + "</text>\n";
        }
        ++color;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace softspine

#endif
