#pragma once

#include <string>
#include <vector>

#include "sdw/autocorr.hpp"

namespace sdw {

// CSV with columns label,e,y_obs,y_trend, one row per observation.
std::string scatter_to_csv(const ScatterSeries& series, const std::vector<std::string>& labels);

// Deterministic SVG 1.1 document: fixed 800x600 viewBox, linear axis scaling
// with 5% margins, radius-3 point marks, one trend line, slope in the title.
std::string scatter_to_svg(const ScatterSeries& series);

}  // namespace sdw
