#pragma once

#include "dlm/params.hpp"
#include "dlm/solver.hpp"
#include "dlm/statics.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlm {

// Bad config content: parse errors (with line numbers) and violated
// field constraints (with field paths).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem trouble: unreadable config/data, unwritable output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PlotKind { phillips, supply_demand, wage_paths };

struct PlotBlock {
    PlotKind kind = PlotKind::phillips;
    bool approximations = false; // add the two expansion curves
};

struct FlattenBlock {
    std::string name;
    ParamChanges changes;
    double grid_min = 2.05;
    double grid_max = 3.0;
    int grid_n = 200;
};

struct RatioBlock {
    std::string name = "ratio";
    RatioScenario scenario;
    std::vector<double> B_ratio_grid;
    double c_ratio_min = 1.0;
    double c_ratio_max = 1.03;
    int n_c = 61;
    bool equal_ratio_line = true;
};

struct OutputBlock {
    std::string dir = "out";
    bool csv = true;
    bool svg = true;
    int precision = 12;
};

struct RunConfig {
    std::string name; // output filename stem
    ModelParams params;
    RootOptions solver;
    SweepSpec sweep{SweepVariable::L_over_L1, 1.005, 2.0, 200,
                    Spacing::linear};
    PlotBlock plot;
    std::vector<FlattenBlock> flatten;
    std::vector<RatioBlock> ratio;
    OutputBlock output;
};

// Parses and validates a JSON config.  Messages carry the line number for
// syntax errors and the field path for constraint violations.
RunConfig parse_config(std::string_view text, std::string_view name);

// Reads the file (IoError when unreadable) and parses it; the filename
// stem becomes the default output stem.
RunConfig load_config(const std::filesystem::path& path);

} // namespace dlm
