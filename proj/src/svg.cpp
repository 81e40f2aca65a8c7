#include "dlm/svg.hpp"

#include "dlm/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dlm::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 74.0;
constexpr double kMarginRight = 18.0;
constexpr double kMarginBottom = 52.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#ff7f0e", "#9467bd", "#555555"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s(buf);
    if (s == "-0.00") {
        s = "0.00";
    }
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += ch;
        }
    }
    return out;
}

const char* dash_array(Stroke s) {
    switch (s) {
    case Stroke::dashed: return "9,6";
    case Stroke::dotted: return "2,5";
    case Stroke::dash_dot: return "11,5,2,5";
    default: return "";
    }
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range fit_range(const Figure& fig, bool horizontal,
                const std::optional<std::pair<double, double>>& pin) {
    if (pin) {
        return {pin->first, pin->second};
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Series& s : fig.series) {
        for (const auto& [x, y] : s.points) {
            const double q = horizontal ? x : y;
            if (!std::isfinite(q)) {
                continue;
            }
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
    }
    if (!(lo <= hi)) {
        return {0.0, 1.0};
    }
    if (lo == hi) {
        return {lo - 1.0, hi + 1.0};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

// {1,2,5} * 10^k step covering the range with ~n ticks
std::vector<double> nice_ticks(const Range& r, int n) {
    const double rough = (r.hi - r.lo) / std::max(1, n);
    const double mag = std::pow(10.0, std::floor(std::log10(rough)));
    double step = 10.0 * mag;
    for (double m : {1.0, 2.0, 5.0}) {
        if (m * mag >= rough) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> ticks;
    if (!(r.hi > r.lo) || !(step > 0.0)) {
        return ticks;
    }
    const long k0 = static_cast<long>(std::ceil(r.lo / step - 1e-9));
    const long k1 = static_cast<long>(std::floor(r.hi / step + 1e-9));
    for (long k = k0; k <= k1; ++k) {
        const double t = static_cast<double>(k) * step;
        ticks.push_back(t == 0.0 ? 0.0 : t);
    }
    return ticks;
}

} // namespace

std::string render(const Figure& fig) {
    const Range xr = fit_range(fig, true, fig.x_range);
    const Range yr = fit_range(fig, false, fig.y_range);

    bool any_label = false;
    for (const Series& s : fig.series) {
        any_label = any_label || !s.label.empty();
    }
    const double margin_top = (fig.title.empty() ? 12.0 : 36.0) +
                              (any_label ? 26.0 : 6.0);
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - margin_top - kMarginBottom;

    const auto px = [&](double x) {
        return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    const auto py = [&](double y) {
        return kHeight - kMarginBottom - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
           " " + num(kHeight) + "\" font-family=\"Helvetica,Arial,sans-serif\">\n";
    out += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"#ffffff\"/>\n";
    out += "<clipPath id=\"plot\"><rect x=\"" + num(kMarginLeft) + "\" y=\"" +
           num(margin_top) + "\" width=\"" + num(plot_w) + "\" height=\"" +
           num(plot_h) + "\"/></clipPath>\n";

    if (!fig.title.empty()) {
        out += "<text x=\"" + num(kWidth / 2) +
               "\" y=\"24\" text-anchor=\"middle\" font-size=\"17\">" +
               escape(fig.title) + "</text>\n";
    }

    // gridlines and tick labels
    for (double t : nice_ticks(xr, 6)) {
        const double x = px(t);
        out += "<line x1=\"" + num(x) + "\" y1=\"" + num(margin_top) +
               "\" x2=\"" + num(x) + "\" y2=\"" +
               num(kHeight - kMarginBottom) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + num(x) + "\" y=\"" +
               num(kHeight - kMarginBottom + 18.0) +
               "\" text-anchor=\"middle\" font-size=\"12\">" +
               format_float(t, 6) + "</text>\n";
    }
    for (double t : nice_ticks(yr, 6)) {
        const double y = py(t);
        out += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(y) +
               "\" x2=\"" + num(kWidth - kMarginRight) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + num(kMarginLeft - 8.0) + "\" y=\"" +
               num(y + 4.0) + "\" text-anchor=\"end\" font-size=\"12\">" +
               format_float(t, 6) + "</text>\n";
    }

    // frame
    out += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(margin_top) +
           "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // axis labels
    if (!fig.x_label.empty()) {
        out += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" +
               num(kHeight - 12.0) +
               "\" text-anchor=\"middle\" font-size=\"14\">" +
               escape(fig.x_label) + "</text>\n";
    }
    if (!fig.y_label.empty()) {
        const double cy = margin_top + plot_h / 2;
        out += "<text x=\"20\" y=\"" + num(cy) +
               "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
               num(cy) + ")\">" + escape(fig.y_label) + "</text>\n";
    }

    // legend row under the title
    double legend_x = kMarginLeft;
    const double legend_y = margin_top - 12.0;
    for (std::size_t i = 0; i < fig.series.size(); ++i) {
        const Series& s = fig.series[i];
        if (s.label.empty()) {
            continue;
        }
        const std::string color =
            s.color.empty() ? kPalette[i % 6] : s.color;
        if (s.markers) {
            out += "<circle cx=\"" + num(legend_x + 13.0) + "\" cy=\"" +
                   num(legend_y - 4.0) + "\" r=\"3.2\" fill=\"" + color +
                   "\"/>\n";
        } else {
            out += "<line x1=\"" + num(legend_x) + "\" y1=\"" +
                   num(legend_y - 4.0) + "\" x2=\"" + num(legend_x + 26.0) +
                   "\" y2=\"" + num(legend_y - 4.0) + "\" stroke=\"" + color +
                   "\" stroke-width=\"2\"";
            const char* dash = dash_array(s.stroke);
            if (*dash) {
                out += " stroke-dasharray=\"" + std::string(dash) + "\"";
            }
            out += "/>\n";
        }
        out += "<text x=\"" + num(legend_x + 32.0) + "\" y=\"" + num(legend_y) +
               "\" font-size=\"12\">" + escape(s.label) + "</text>\n";
        legend_x += 32.0 + 7.2 * static_cast<double>(s.label.size()) + 26.0;
    }

    // series
    for (std::size_t i = 0; i < fig.series.size(); ++i) {
        const Series& s = fig.series[i];
        const std::string color =
            s.color.empty() ? kPalette[i % 6] : s.color;
        if (s.markers) {
            out += "<g clip-path=\"url(#plot)\" fill=\"" + color + "\">\n";
            for (const auto& [x, y] : s.points) {
                if (!std::isfinite(x) || !std::isfinite(y)) {
                    continue;
                }
                out += "<circle class=\"pt\" cx=\"" + num(px(x)) + "\" cy=\"" +
                       num(py(y)) + "\" r=\"3.2\"/>\n";
            }
            out += "</g>\n";
            continue;
        }
        std::string pts;
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                continue;
            }
            if (!pts.empty()) {
                pts += ' ';
            }
            pts += num(px(x)) + "," + num(py(y));
        }
        out += "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"" +
               color + "\" stroke-width=\"2\"";
        const char* dash = dash_array(s.stroke);
        if (*dash) {
            out += " stroke-dasharray=\"" + std::string(dash) + "\"";
        }
        out += " points=\"" + pts + "\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace dlm::svg
