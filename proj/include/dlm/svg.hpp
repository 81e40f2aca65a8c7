#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dlm::svg {

enum class Stroke { solid, dashed, dotted, dash_dot };

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
    std::string color;   // "#rrggbb"; palette-by-index when empty
    Stroke stroke = Stroke::solid;
    bool markers = false; // scatter: circles instead of a polyline
};

struct Figure {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    // Auto-fitted to the data (5% padding) unless pinned here.
    std::optional<std::pair<double, double>> x_range;
    std::optional<std::pair<double, double>> y_range;
};

// Renders a self-contained SVG document: no external references, all
// coordinates emitted with fixed precision so output is byte-stable.
std::string render(const Figure& fig);

} // namespace dlm::svg
