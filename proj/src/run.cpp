#include "dlm/run.hpp"

#include "dlm/csv.hpp"
#include "dlm/perturbation.hpp"
#include "dlm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace dlm {

namespace {

struct Emitter {
    std::filesystem::path dir;
    RunReport report;

    void write(const std::string& filename, const std::string& content) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            throw IoError("cannot create output directory " + dir.string() +
                          ": " + ec.message());
        }
        const std::filesystem::path path = dir / filename;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + path.string());
        }
        out << content;
        if (!out) {
            throw IoError("write failed: " + path.string());
        }
        report.files.push_back(path.string());
    }

    void finish(const std::string& stem) {
        std::string text = "outputs:\n";
        for (const auto& f : report.files) {
            text += "  " + f + "\n";
        }
        for (const auto& n : report.notes) {
            text += n + "\n";
        }
        if (report.failures.empty()) {
            text += "failures: none\n";
        } else {
            text += "failures:\n";
            for (const auto& f : report.failures) {
                text += "  " + f + "\n";
            }
        }
        write(stem + "_summary.txt", text);
    }
};

std::string curve_csv(const PhillipsCurve& curve, int precision) {
    CsvTable t;
    t.header = {"L_over_L1", "wbar", "w2", "wbar1", "g", "v", "Z"};
    t.rows.reserve(curve.samples.size());
    for (const CurveSample& s : curve.samples) {
        t.rows.push_back({format_float(s.L_over_L1, precision),
                          format_float(s.wbar, precision),
                          format_float(s.w2, precision),
                          format_float(s.wbar1, precision),
                          format_float(s.g, precision),
                          format_float(s.v, precision),
                          format_float(s.Z, precision)});
    }
    return to_csv(t);
}

std::vector<std::pair<double, double>> wbar_points(const PhillipsCurve& c) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(c.samples.size());
    for (const CurveSample& s : c.samples) {
        pts.emplace_back(s.L_over_L1, s.wbar);
    }
    return pts;
}

PhillipsCurve trace_with(const RunConfig& cfg, Emitter& em) {
    std::vector<SweepFailure> failures;
    const PhillipsCurve curve =
        trace_curve(cfg.params, cfg.sweep, cfg.solver, &failures);
    for (const SweepFailure& f : failures) {
        em.report.failures.push_back("sweep value " + format_float(f.value, 12) +
                                     ": " + f.message);
    }
    return curve;
}

void emit_phillips(const RunConfig& cfg, Emitter& em) {
    const PhillipsCurve curve = trace_with(cfg, em);
    if (cfg.output.csv) {
        em.write(cfg.name + "_curve.csv", curve_csv(curve, cfg.output.precision));
    }
    if (!cfg.output.svg) {
        return;
    }
    svg::Figure fig;
    fig.title = "Wage curve";
    fig.x_label = "L / L1";
    fig.y_label = "average wage";
    fig.series.push_back({"exact", wbar_points(curve), "#1f77b4",
                          svg::Stroke::solid, false});
    if (cfg.plot.approximations && !curve.samples.empty()) {
        svg::Series small{"thin-margin expansion", {}, "#d62728",
                          svg::Stroke::dashed, false};
        svg::Series large{"secondary-dominated expansion", {}, "#2ca02c",
                          svg::Stroke::dotted, false};
        for (const CurveSample& s : curve.samples) {
            const double L = s.L_over_L1 * cfg.params.L1;
            small.points.emplace_back(
                s.L_over_L1, wage_curve_primary(L, cfg.params, 0).value);
            large.points.emplace_back(
                s.L_over_L1, wage_curve_secondary(L, cfg.params).value);
        }
        // keep the frame on the exact curve
        double lo = curve.samples.front().wbar;
        double hi = curve.samples.back().wbar;
        fig.y_range = {lo - 0.05 * (hi - lo), hi + 0.05 * (hi - lo)};
        fig.series.push_back(std::move(small));
        fig.series.push_back(std::move(large));
    }
    em.write(cfg.name + "_curve.svg", svg::render(fig));
}

void emit_supply_demand(const RunConfig& cfg, Emitter& em) {
    const Equilibrium eq = solve_equilibrium(cfg.params, cfg.solver);
    verify_equilibrium(eq, cfg.params);
    const int n = 101;
    CsvTable t;
    t.header = {"w2", "L2_demand", "L2_supply"};
    svg::Series demand{"demand", {}, "#1f77b4", svg::Stroke::solid, false};
    svg::Series supply{"supply", {}, "#2ca02c", svg::Stroke::solid, false};
    for (int i = 0; i < n; ++i) {
        const double w2 = eq.w2 * (0.75 + 0.75 * i / (n - 1));
        const double d = aggregate_secondary_demand(cfg.params, w2);
        const double s = cfg.params.B * std::pow(w2, cfg.params.beta);
        t.rows.push_back({format_float(w2, cfg.output.precision),
                          format_float(d, cfg.output.precision),
                          format_float(s, cfg.output.precision)});
        demand.points.emplace_back(d, w2);
        supply.points.emplace_back(s, w2);
    }
    if (cfg.output.csv) {
        em.write(cfg.name + "_supply_demand.csv", to_csv(t));
    }
    if (cfg.output.svg) {
        svg::Figure fig;
        fig.title = "Secondary labor market";
        fig.x_label = "L2";
        fig.y_label = "w2";
        fig.series.push_back(std::move(demand));
        fig.series.push_back(std::move(supply));
        fig.series.push_back({"clearing point",
                              {{eq.L2, eq.w2}},
                              "#000000",
                              svg::Stroke::solid,
                              true});
        fig.x_range = {0.0, 2.5 * eq.L2};
        em.write(cfg.name + "_supply_demand.svg", svg::render(fig));
    }
    em.report.notes.push_back("w2 = " + format_float(eq.w2, cfg.output.precision));
    em.report.notes.push_back("L2 = " + format_float(eq.L2, cfg.output.precision));
}

void emit_wage_paths(const RunConfig& cfg, Emitter& em) {
    const PhillipsCurve curve = trace_with(cfg, em);
    if (cfg.output.csv) {
        em.write(cfg.name + "_curve.csv", curve_csv(curve, cfg.output.precision));
    }
    if (!cfg.output.svg) {
        return;
    }
    svg::Figure fig;
    fig.title = "Wage paths";
    fig.x_label = "L / L1";
    fig.y_label = "wage";
    svg::Series insider{"insider wage", {}, "#1f77b4", svg::Stroke::solid,
                        false};
    svg::Series secondary{"secondary wage", {}, "#d62728", svg::Stroke::dashed,
                          false};
    svg::Series average{"average wage", {}, "#777777", svg::Stroke::dotted,
                        false};
    for (const CurveSample& s : curve.samples) {
        insider.points.emplace_back(s.L_over_L1, s.wbar1);
        secondary.points.emplace_back(s.L_over_L1, s.w2);
        average.points.emplace_back(s.L_over_L1, s.wbar);
    }
    fig.series.push_back(std::move(insider));
    fig.series.push_back(std::move(secondary));
    fig.series.push_back(std::move(average));
    em.write(cfg.name + "_wage_paths.svg", svg::render(fig));
}

void emit_curve(const RunConfig& cfg, Emitter& em) {
    switch (cfg.plot.kind) {
    case PlotKind::phillips:
        emit_phillips(cfg, em);
        break;
    case PlotKind::supply_demand:
        emit_supply_demand(cfg, em);
        break;
    case PlotKind::wage_paths:
        emit_wage_paths(cfg, em);
        break;
    }
}

void emit_flatten(const RunConfig& cfg, const FlattenBlock& block,
                  Emitter& em) {
    const FlatteningResult res =
        flattening_experiment(cfg.params, block.changes, block.grid_min,
                              block.grid_max, block.grid_n, cfg.solver);
    const std::string stem = cfg.name + "_" + block.name;
    if (cfg.output.csv) {
        em.write(stem + "_base.csv", curve_csv(res.base, cfg.output.precision));
        em.write(stem + "_modified.csv",
                 curve_csv(res.modified, cfg.output.precision));
        CsvTable t;
        t.header = {"L_over_L1", "base_slope", "modified_slope", "ratio"};
        for (const SlopePoint& p : res.slopes) {
            t.rows.push_back({format_float(p.L_over_L1, cfg.output.precision),
                              format_float(p.base_slope, cfg.output.precision),
                              format_float(p.modified_slope,
                                           cfg.output.precision),
                              format_float(p.ratio, cfg.output.precision)});
        }
        em.write(stem + "_slopes.csv", to_csv(t));
    }
    if (cfg.output.svg) {
        svg::Figure fig;
        fig.title = "Wage curve under " + block.name;
        fig.x_label = "L / L1";
        fig.y_label = "average wage";
        fig.series.push_back({"base", wbar_points(res.base), "#1f77b4",
                              svg::Stroke::solid, false});
        fig.series.push_back({"modified", wbar_points(res.modified), "#ff7f0e",
                              svg::Stroke::dash_dot, false});
        em.write(stem + ".svg", svg::render(fig));
    }
    double worst = 0.0;
    for (const SlopePoint& p : res.slopes) {
        worst = std::max(worst, p.ratio);
    }
    em.report.notes.push_back(block.name + ": max slope ratio = " +
                              format_float(worst, 6));
}

void emit_ratio(const RunConfig& cfg, const RatioBlock& block, Emitter& em) {
    const double target = block.scenario.target();
    const std::string stem = cfg.name + "_" + block.name;
    const auto lines = ratio_surface(block.scenario, block.B_ratio_grid,
                                     block.c_ratio_min, block.c_ratio_max,
                                     block.n_c);
    if (cfg.output.csv) {
        CsvTable t;
        t.header = {"B_ratio", "c_ratio", "gamma_ratio"};
        for (const RatioLine& line : lines) {
            for (const auto& [c, gamma] : line.points) {
                t.rows.push_back({format_float(line.B_ratio,
                                               cfg.output.precision),
                                  format_float(c, cfg.output.precision),
                                  format_float(gamma, cfg.output.precision)});
            }
        }
        em.write(stem + "_surface.csv", to_csv(t));
    }
    em.report.notes.push_back(block.name + ": target = " +
                              format_float(target, 12));
    std::optional<double> equal_ratio;
    if (target > 0.0 && target < 1.0) {
        equal_ratio = solve_equal_ratio(block.scenario);
        em.report.notes.push_back(block.name + ": equal-ratio r = " +
                                  format_float(*equal_ratio, 12));
        em.report.notes.push_back(
            block.name + ": c-only c_ratio = " +
            format_float(1.0 / target, 12));
    }
    if (cfg.output.svg) {
        svg::Figure fig;
        fig.title = "Parameter combinations with equal wage response";
        fig.x_label = "c ratio";
        fig.y_label = "gamma ratio";
        for (const RatioLine& line : lines) {
            fig.series.push_back({"B ratio " + format_float(line.B_ratio, 6),
                                  line.points, "", svg::Stroke::solid, false});
        }
        if (equal_ratio && block.equal_ratio_line) {
            fig.series.push_back({"equal-ratio point",
                                  {{*equal_ratio, 1.0 / *equal_ratio}},
                                  "#000000",
                                  svg::Stroke::solid,
                                  true});
        }
        em.write(stem + ".svg", svg::render(fig));
    }
}

} // namespace

RunReport run_curve(const RunConfig& cfg) {
    Emitter em{cfg.output.dir, {}};
    emit_curve(cfg, em);
    em.finish(cfg.name);
    return em.report;
}

RunReport run_flatten(const RunConfig& cfg) {
    if (cfg.flatten.empty()) {
        throw ConfigError("config has no flatten experiments");
    }
    Emitter em{cfg.output.dir, {}};
    for (const FlattenBlock& block : cfg.flatten) {
        emit_flatten(cfg, block, em);
    }
    em.finish(cfg.name);
    return em.report;
}

RunReport run_ratio(const RunConfig& cfg) {
    if (cfg.ratio.empty()) {
        throw ConfigError("config has no ratio experiments");
    }
    Emitter em{cfg.output.dir, {}};
    for (const RatioBlock& block : cfg.ratio) {
        emit_ratio(cfg, block, em);
    }
    em.finish(cfg.name);
    return em.report;
}

RunReport run_all(const RunConfig& cfg) {
    Emitter em{cfg.output.dir, {}};
    emit_curve(cfg, em);
    for (const FlattenBlock& block : cfg.flatten) {
        emit_flatten(cfg, block, em);
    }
    for (const RatioBlock& block : cfg.ratio) {
        emit_ratio(cfg, block, em);
    }
    em.finish(cfg.name);
    return em.report;
}

EmpiricalSeries parse_empirical(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        return {};
    }
    const CsvTable t = parse_csv(text);
    const int period = t.column("period");
    const int unemployment = t.column("unemployment_rate");
    const int growth = t.column("wage_growth");
    if (period < 0 || unemployment < 0 || growth < 0) {
        throw CsvError(
            "header must contain period, unemployment_rate, wage_growth", 1);
    }
    EmpiricalSeries series;
    series.points.reserve(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::size_t row = i + 2; // 1-based, after the header
        EmpiricalPoint p;
        p.period = t.rows[i][period];
        p.unemployment = parse_number(t.rows[i][unemployment], row);
        p.wage_growth = parse_number(t.rows[i][growth], row);
        if (!(p.unemployment > 0.0 && p.unemployment < 100.0)) {
            throw CsvError("unemployment_rate must lie in (0,100), got " +
                               t.rows[i][unemployment],
                           row);
        }
        if (!std::isfinite(p.wage_growth)) {
            throw CsvError("wage_growth must be finite", row);
        }
        series.points.push_back(std::move(p));
    }
    return series;
}

std::string overlay_svg(const PhillipsCurve& curve,
                        const EmpiricalSeries& data) {
    svg::Figure fig;
    fig.title = "Wage growth vs employment rate";
    fig.x_label = "employment rate";
    fig.y_label = "wage growth";

    svg::Series scatter{"data", {}, "#1f77b4", svg::Stroke::solid, true};
    for (const EmpiricalPoint& p : data.points) {
        scatter.points.emplace_back(100.0 - p.unemployment, p.wage_growth);
    }

    svg::Series model{"model (shape)", {}, "#d62728", svg::Stroke::solid,
                      false};
    const auto pts = wbar_points(curve);
    if (!data.points.empty() && pts.size() > 1) {
        const double x0 = pts.front().first;
        const double x1 = pts.back().first;
        double y0 = pts.front().second;
        double y1 = y0;
        for (const auto& p : pts) {
            y0 = std::min(y0, p.second);
            y1 = std::max(y1, p.second);
        }
        double dx0 = scatter.points.front().first, dx1 = dx0;
        double dy0 = scatter.points.front().second, dy1 = dy0;
        for (const auto& p : scatter.points) {
            dx0 = std::min(dx0, p.first);
            dx1 = std::max(dx1, p.first);
            dy0 = std::min(dy0, p.second);
            dy1 = std::max(dy1, p.second);
        }
        if (dx1 == dx0) {
            dx0 -= 0.5;
            dx1 += 0.5;
        }
        if (dy1 == dy0) {
            dy0 -= 0.5;
            dy1 += 0.5;
        }
        for (const auto& [x, y] : pts) {
            const double fx = x1 > x0 ? (x - x0) / (x1 - x0) : 0.5;
            const double fy = y1 > y0 ? (y - y0) / (y1 - y0) : 0.5;
            model.points.emplace_back(dx0 + fx * (dx1 - dx0),
                                      dy0 + fy * (dy1 - dy0));
        }
    } else {
        model.points = pts;
        model.label = "model";
    }

    if (!scatter.points.empty()) {
        fig.series.push_back(std::move(scatter));
    }
    fig.series.push_back(std::move(model));
    return svg::render(fig);
}

RunReport run_overlay(const RunConfig& cfg,
                      const std::filesystem::path& data_csv) {
    std::ifstream in(data_csv, std::ios::binary);
    if (!in) {
        throw IoError("cannot read data file: " + data_csv.string());
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    const EmpiricalSeries data = parse_empirical(text);

    Emitter em{cfg.output.dir, {}};
    const PhillipsCurve curve = trace_with(cfg, em);
    em.write(cfg.name + "_overlay.svg", overlay_svg(curve, data));
    em.report.notes.push_back("data points: " +
                              std::to_string(data.points.size()));
    em.finish(cfg.name);
    return em.report;
}

std::string describe_equilibrium(const Equilibrium& eq, int precision) {
    const auto line = [&](const char* name, double value) {
        return std::string(name) + " = " + format_float(value, precision) +
               "\n";
    };
    std::string out;
    out += line("g", eq.scaled.g);
    out += line("v", eq.scaled.v);
    out += line("w2", eq.w2);
    out += line("L2", eq.L2);
    out += line("L", eq.L);
    out += line("Y", eq.Y);
    out += line("W", eq.W);
    out += line("wbar", eq.wbar);
    out += line("wbar1", eq.wbar1);
    out += line("Z", eq.Z);
    return out;
}

} // namespace dlm
