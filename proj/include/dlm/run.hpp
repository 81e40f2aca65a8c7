#pragma once

#include "dlm/config.hpp"
#include "dlm/equilibrium.hpp"
#include "dlm/statics.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dlm {

// Observed wage growth by period; unemployment in percent of the labor
// force.
struct EmpiricalPoint {
    std::string period;
    double unemployment;
    double wage_growth;
};

struct EmpiricalSeries {
    std::vector<EmpiricalPoint> points;
};

// CSV with header (period, unemployment_rate, wage_growth); extra columns
// are ignored.  Whitespace-only text gives an empty series.  Bad cells and
// unemployment outside (0,100) throw CsvError naming the row.
EmpiricalSeries parse_empirical(std::string_view text);

// What a run produced.
struct RunReport {
    std::vector<std::string> files;    // paths written, in emission order
    std::vector<std::string> failures; // sweep points the solver gave up on
    std::vector<std::string> notes;    // headline numbers, one per line
};

// Wage-curve trace and the figure selected by cfg.plot.
RunReport run_curve(const RunConfig& cfg);

// Slope-comparison experiments; ConfigError when cfg has none.
RunReport run_flatten(const RunConfig& cfg);

// Ratio-decomposition experiments; ConfigError when cfg has none.
RunReport run_ratio(const RunConfig& cfg);

// Curve plus whatever experiments the config carries.
RunReport run_all(const RunConfig& cfg);

// Scatter of (employment rate, wage growth) with the model curve mapped
// affinely onto the data's ranges -- a shape comparison, not a fit.  An
// empty series plots the curve in native coordinates.
std::string overlay_svg(const PhillipsCurve& curve,
                        const EmpiricalSeries& data);

// Traces cfg's curve and overlays the data file.
RunReport run_overlay(const RunConfig& cfg,
                      const std::filesystem::path& data_csv);

// One "field = value" line per equilibrium quantity.
std::string describe_equilibrium(const Equilibrium& eq, int precision);

} // namespace dlm
