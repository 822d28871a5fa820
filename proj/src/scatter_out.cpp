#include "sdw/scatter_out.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sdw {

namespace {

std::string num(double v, const char* fmt = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

// pixel coordinates get two decimals; enough for a plot, stable bytes
std::string px(double v) { return num(v, "%.2f"); }

struct Axis {
    double lo, hi;   // data range with margin
    double p0, p1;   // pixel range

    double map(double v) const { return p0 + (v - lo) / (hi - lo) * (p1 - p0); }
};

Axis make_axis(double lo, double hi, double p0, double p1) {
    if (!(hi > lo)) {  // degenerate range: pad around the single value
        lo -= 1.0;
        hi += 1.0;
    }
    const double margin = 0.05 * (hi - lo);
    return Axis{lo - margin, hi + margin, p0, p1};
}

}  // namespace

std::string scatter_to_csv(const ScatterSeries& series, const std::vector<std::string>& labels) {
    std::string out = "label,e,y_obs,y_trend\n";
    for (Eigen::Index i = 0; i < series.x.size(); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        out += idx < labels.size() ? labels[idx] : std::to_string(i + 1);
        out += ',' + num(series.x(i)) + ',' + num(series.y_observed(i)) + ',' +
               num(series.y_trend(i)) + '\n';
    }
    return out;
}

std::string scatter_to_svg(const ScatterSeries& series) {
    const double width = 800, height = 600;
    const double pad = 50;  // frame inset for the plot area

    double xlo = series.x.minCoeff(), xhi = series.x.maxCoeff();
    double ylo = std::min(series.y_observed.minCoeff(), series.y_trend.minCoeff());
    double yhi = std::max(series.y_observed.maxCoeff(), series.y_trend.maxCoeff());
    const Axis ax = make_axis(xlo, xhi, pad, width - pad);
    const Axis ay = make_axis(ylo, yhi, height - pad, pad);  // y grows upward

    const std::string slope_text = "slope=" + num(series.slope);
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
           "width=\"800\" height=\"600\">\n";
    svg += "<title>residual autocorrelation scatterplot, " + slope_text + "</title>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + px(pad) + "\" y=\"" + px(pad) + "\" width=\"" + px(width - 2 * pad) +
           "\" height=\"" + px(height - 2 * pad) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    // zero lines, when zero is inside the padded range
    if (ax.lo < 0.0 && ax.hi > 0.0) {
        svg += "<line x1=\"" + px(ax.map(0)) + "\" y1=\"" + px(pad) + "\" x2=\"" + px(ax.map(0)) +
               "\" y2=\"" + px(height - pad) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    if (ay.lo < 0.0 && ay.hi > 0.0) {
        svg += "<line x1=\"" + px(pad) + "\" y1=\"" + px(ay.map(0)) + "\" x2=\"" +
               px(width - pad) + "\" y2=\"" + px(ay.map(0)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }

    // trend line between the data-range x extremes
    svg += "<line x1=\"" + px(ax.map(xlo)) + "\" y1=\"" + px(ay.map(series.slope * xlo)) +
           "\" x2=\"" + px(ax.map(xhi)) + "\" y2=\"" + px(ay.map(series.slope * xhi)) +
           "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

    for (Eigen::Index i = 0; i < series.x.size(); ++i) {
        svg += "<circle cx=\"" + px(ax.map(series.x(i))) + "\" cy=\"" +
               px(ay.map(series.y_observed(i))) +
               "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.8\"/>\n";
    }

    svg += "<text x=\"" + px(pad + 6) + "\" y=\"" + px(pad - 10) +
           "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#222222\">" + slope_text +
           "</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace sdw
