#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlm/config.hpp"
#include "dlm/csv.hpp"
#include "dlm/equilibrium.hpp"
#include "dlm/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

using namespace dlm;
namespace fs = std::filesystem;

namespace {

fs::path source_dir() { return fs::path(DLM_SOURCE_DIR); }

fs::path fresh_dir(const std::string& leaf) {
    const fs::path d = fs::temp_directory_path() / "dlm_io" / leaf;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

const char* kMinimalConfig = R"({
  "params": {"alpha": 0.5, "c": 0.5, "beta": 0.5, "gamma": 0.5,
             "L1": 1.0, "B": 1.0}
})";

} // namespace

TEST_CASE("floats format to the shortest faithful string") {
    CHECK(format_float(0.25, 12) == "0.25");
    CHECK(format_float(2.0, 12) == "2");
    CHECK(format_float(0.1, 17) == "0.1");
    CHECK(format_float(1.0 / 3.0, 12) == "0.333333333333");
    CHECK(format_float(std::numbers::pi, 6) == "3.14159");
    CHECK(format_float(0.0, 12) == "0");
    CHECK(format_float(-0.0, 12) == "0");
    CHECK(format_float(1e300, 17) == "1e+300");
    CHECK(format_float(std::nan(""), 12) == "nan");
    CHECK(format_float(-1.0 / 0.0, 12) == "-inf");
    CHECK_THROWS_AS(format_float(1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(format_float(1.0, 18), std::invalid_argument);
}

TEST_CASE("full precision round-trips bit for bit") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> scale(-300, 300);
    for (int i = 0; i < 500; ++i) {
        const double x = std::ldexp(mantissa(rng), scale(rng));
        const double back = parse_number(format_float(x, 17), 1);
        CHECK(back == x);
        // capped precision stays within half an ulp of the 12th digit
        const double coarse = parse_number(format_float(x, 12), 1);
        CHECK(std::abs(coarse - x) <= 5e-12 * std::abs(x));
    }
}

TEST_CASE("number parsing takes whole trimmed cells only") {
    CHECK(parse_number("1.5", 1) == 1.5);
    CHECK(parse_number(" 2.5\t", 1) == 2.5);
    CHECK(parse_number("-3e2", 1) == -300.0);
    CHECK_THROWS_AS(parse_number("", 1), CsvError);
    CHECK_THROWS_AS(parse_number("abc", 1), CsvError);
    CHECK_THROWS_AS(parse_number("1.5x", 1), CsvError);
    CHECK_THROWS_AS(parse_number("1,5", 1), CsvError);
    try {
        parse_number("bogus", 7);
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.row == 7);
        CHECK(std::string(e.what()).find("row 7") != std::string::npos);
    }
}

TEST_CASE("csv tables survive a round trip") {
    CsvTable t;
    t.header = {"a", "b"};
    t.rows = {{"1", "2"}, {"3", "4.5"}};
    const std::string text = to_csv(t);
    CHECK(text == "a,b\n1,2\n3,4.5\n");
    const CsvTable back = parse_csv(text);
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
    CHECK(back.column("b") == 1);
    CHECK(back.column("zz") == -1);
}

TEST_CASE("csv parsing tolerates CRLF and blank lines") {
    const CsvTable t = parse_csv("a,b\r\n1,2\r\n\r\n3,4\n\n");
    CHECK(t.rows.size() == 2);
    CHECK(t.rows[1][1] == "4");
}

TEST_CASE("malformed csv names the offending row") {
    CHECK_THROWS_AS(parse_csv(""), CsvError);
    try {
        parse_csv("a,b\n1,2\n1\n");
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.row == 3);
    }
    CsvTable bad;
    bad.header = {"a"};
    bad.rows = {{"x,y"}};
    CHECK_THROWS_AS(to_csv(bad), std::invalid_argument);
}

TEST_CASE("minimal config fills documented defaults") {
    const RunConfig cfg = parse_config(kMinimalConfig, "stub");
    CHECK(cfg.name == "stub");
    CHECK(cfg.params.alpha == 0.5);
    CHECK(cfg.params.B == 1.0);
    CHECK(cfg.params.A == 1.0);
    CHECK(cfg.sweep.variable == SweepVariable::L_over_L1);
    CHECK(cfg.sweep.min == 1.005);
    CHECK(cfg.sweep.max == 2.0);
    CHECK(cfg.sweep.n == 200);
    CHECK(cfg.plot.kind == PlotKind::phillips);
    CHECK_FALSE(cfg.plot.approximations);
    CHECK(cfg.output.csv);
    CHECK(cfg.output.svg);
    CHECK(cfg.output.precision == 12);
    CHECK(cfg.flatten.empty());
    CHECK(cfg.ratio.empty());
}

TEST_CASE("config errors carry the field path") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "gamma": 0.5,
                                    "L1": 1.0, "B": 1.0}})",
                     "stub"),
        doctest::Contains("beta"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 1.0, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0}})",
                     "stub"),
        doctest::Contains("alpha"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0,
                                    "alpa": 1.0}})",
                     "stub"),
        doctest::Contains("alpa"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"bogus": 1})", "stub"),
                         doctest::Contains("unknown field"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"name": ""})", "stub"),
                         doctest::Contains("name"), ConfigError);
}

TEST_CASE("json syntax errors report the line") {
    CHECK_THROWS_WITH_AS(parse_config("{\n  \"params\": {\n  ,\n}", "stub"),
                         doctest::Contains("parse error at line 3"),
                         ConfigError);
}

TEST_CASE("supply scale may be given as an anchor wage instead") {
    const RunConfig cfg = parse_config(
        R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5, "gamma": 0.5,
                       "L1": 1.0, "w0": 2.0}})",
        "stub");
    // B = L1 / w0^beta = 1/sqrt(2)
    CHECK(cfg.params.B ==
          doctest::Approx(0.707106781186547524).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0,
                                    "w0": 2.0}})",
                     "stub"),
        doctest::Contains("not both"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0}})",
                     "stub"),
        doctest::Contains("B or w0"), ConfigError);
}

TEST_CASE("sweep, solver and output blocks are validated") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0},
                         "sweep": {"min": 1.1, "max": 2.0, "n": 1}})",
                     "stub"),
        doctest::Contains("n"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0},
                         "sweep": {"variable": "q", "min": 1.1, "max": 2.0}})",
                     "stub"),
        doctest::Contains("variable"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0},
                         "output": {"precision": 5}})",
                     "stub"),
        doctest::Contains("precision"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0},
                         "solver": {"rel_tol": 0.5}})",
                     "stub"),
        doctest::Contains("rel_tol"), ConfigError);

    const RunConfig cfg = parse_config(
        R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5, "gamma": 0.5,
                       "L1": 1.0, "B": 1.0},
            "solver": {"rel_tol": 1e-6, "max_iter": 77},
            "sweep": {"variable": "g", "min": 0.1, "max": 10.0, "n": 5,
                      "spacing": "log"},
            "output": {"formats": ["csv"], "precision": 8}})",
        "stub");
    CHECK(cfg.solver.rel_tol == 1e-6);
    CHECK(cfg.solver.max_iter == 77);
    CHECK(cfg.sweep.variable == SweepVariable::g);
    CHECK(cfg.sweep.spacing == Spacing::log);
    CHECK(cfg.output.csv);
    CHECK_FALSE(cfg.output.svg);
    CHECK(cfg.output.precision == 8);
}

TEST_CASE("experiment blocks are typed and validated") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0},
                         "experiments": [{"type": "bogus"}]})",
                     "stub"),
        doctest::Contains("flatten or ratio"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"alpha": 0.5, "c": 0.5, "beta": 0.5,
                                    "gamma": 0.5, "L1": 1.0, "B": 1.0},
                         "experiments": [{"type": "flatten",
                                          "changes": {}}]})",
                     "stub"),
        doctest::Contains("at least one change"), ConfigError);
}

TEST_CASE("every shipped preset loads and is named by its stem") {
    const char* names[] = {
        "phillips_baseline", "supply_demand",       "wage_paths",
        "flatten_productivity", "flatten_bargaining", "flatten_supply_level",
        "flatten_elasticity",   "flatten_combined",   "ratio_surface"};
    for (const char* name : names) {
        const fs::path p =
            source_dir() / "presets" / (std::string(name) + ".json");
        CAPTURE(name);
        const RunConfig cfg = load_config(p);
        CHECK(cfg.name == name);
        CHECK(cfg.params.alpha == 0.5);
        CHECK(cfg.output.precision == 12);
    }
}

TEST_CASE("baseline preset pins the documented grid") {
    const RunConfig cfg =
        load_config(source_dir() / "presets" / "phillips_baseline.json");
    CHECK(cfg.sweep.variable == SweepVariable::L_over_L1);
    CHECK(cfg.sweep.min == 1.005);
    CHECK(cfg.sweep.max == 2.0);
    CHECK(cfg.sweep.n == 200);
    CHECK(cfg.plot.kind == PlotKind::phillips);
    CHECK(cfg.plot.approximations);
}

TEST_CASE("experiment presets carry their parameter changes") {
    const RunConfig combined =
        load_config(source_dir() / "presets" / "flatten_combined.json");
    REQUIRE(combined.flatten.size() == 1);
    const FlattenBlock& f = combined.flatten[0];
    CHECK(f.name == "combined");
    CHECK(f.changes.c == 0.9);
    CHECK(f.changes.gamma == 0.2);
    CHECK(f.changes.beta == 0.6);
    CHECK(f.changes.B_percent == 20.0);
    CHECK(f.grid_min == 2.05);
    CHECK(f.grid_max == 3.0);
    CHECK(f.grid_n == 200);

    const RunConfig single =
        load_config(source_dir() / "presets" / "flatten_elasticity.json");
    REQUIRE(single.flatten.size() == 1);
    CHECK(single.flatten[0].changes.beta == 0.6);
    CHECK_FALSE(single.flatten[0].changes.c.has_value());
    CHECK_FALSE(single.flatten[0].changes.gamma.has_value());
    CHECK_FALSE(single.flatten[0].changes.B_percent.has_value());

    const RunConfig ratio =
        load_config(source_dir() / "presets" / "ratio_surface.json");
    REQUIRE(ratio.ratio.size() == 1);
    const RatioBlock& r = ratio.ratio[0];
    CHECK(r.scenario.growth_I == 0.03);
    CHECK(r.scenario.growth_II == 0.005);
    CHECK(r.scenario.beta == 0.5);
    REQUIRE(r.B_ratio_grid.size() == 7);
    CHECK(r.B_ratio_grid.front() == 1.0);
    CHECK(r.B_ratio_grid.back() == doctest::Approx(1.006).epsilon(1e-15));
    CHECK(r.n_c == 61);
    CHECK(r.equal_ratio_line);
}

TEST_CASE("missing config file raises an io error") {
    CHECK_THROWS_AS(load_config(fs::path("/no/such/dir/x.json")), IoError);
}

TEST_CASE("filename stem names the run when the config does not") {
    const fs::path dir = fresh_dir("stem");
    const fs::path p = dir / "unnamed_run.json";
    std::ofstream(p) << kMinimalConfig;
    CHECK(load_config(p).name == "unnamed_run");
}

TEST_CASE("curve runs write deterministic files") {
    RunConfig cfg =
        load_config(source_dir() / "presets" / "phillips_baseline.json");
    const fs::path dir1 = fresh_dir("curve1");
    const fs::path dir2 = fresh_dir("curve2");

    cfg.output.dir = dir1.string();
    const RunReport rep = run_curve(cfg);
    REQUIRE(rep.files.size() == 3);
    CHECK(rep.failures.empty());
    for (const std::string& f : rep.files) {
        CAPTURE(f);
        CHECK(fs::exists(f));
    }
    CHECK(fs::exists(dir1 / "phillips_baseline_curve.csv"));
    CHECK(fs::exists(dir1 / "phillips_baseline_curve.svg"));
    CHECK(fs::exists(dir1 / "phillips_baseline_summary.txt"));
    CHECK(slurp(dir1 / "phillips_baseline_summary.txt")
              .find("failures: none") != std::string::npos);

    cfg.output.dir = dir2.string();
    run_curve(cfg);
    CHECK(slurp(dir1 / "phillips_baseline_curve.csv") ==
          slurp(dir2 / "phillips_baseline_curve.csv"));
    CHECK(slurp(dir1 / "phillips_baseline_curve.svg") ==
          slurp(dir2 / "phillips_baseline_curve.svg"));
}

TEST_CASE("emitted curve csv re-reads to the traced values") {
    RunConfig cfg =
        load_config(source_dir() / "presets" / "phillips_baseline.json");
    const fs::path dir = fresh_dir("reread");
    cfg.output.dir = dir.string();
    run_curve(cfg);

    const CsvTable t =
        parse_csv(slurp(dir / "phillips_baseline_curve.csv"));
    const std::vector<std::string> expected = {"L_over_L1", "wbar", "w2",
                                               "wbar1", "g", "v", "Z"};
    CHECK(t.header == expected);
    REQUIRE(t.rows.size() == 200);

    const PhillipsCurve curve = trace_curve(cfg.params, cfg.sweep, cfg.solver);
    REQUIRE(curve.samples.size() == 200);
    for (std::size_t i : {std::size_t{0}, std::size_t{99}, std::size_t{199}}) {
        const CurveSample& s = curve.samples[i];
        const std::size_t row = i + 2;
        CHECK(std::abs(parse_number(t.rows[i][0], row) - s.L_over_L1) <=
              5e-12 * s.L_over_L1);
        CHECK(std::abs(parse_number(t.rows[i][1], row) - s.wbar) <=
              5e-12 * s.wbar);
        CHECK(std::abs(parse_number(t.rows[i][4], row) - s.g) <= 5e-12 * s.g);
        CHECK(std::abs(parse_number(t.rows[i][5], row) - s.v) <= 5e-12 * s.v);
    }
}

TEST_CASE("a starved solver reports every sweep point and keeps going") {
    RunConfig cfg =
        load_config(source_dir() / "presets" / "phillips_baseline.json");
    const fs::path dir = fresh_dir("starved");
    cfg.output.dir = dir.string();
    cfg.solver.max_iter = 2;
    const RunReport rep = run_curve(cfg);
    CHECK(rep.failures.size() == 200);
    const std::string summary =
        slurp(dir / "phillips_baseline_summary.txt");
    CHECK(summary.find("failures:") != std::string::npos);
    CHECK(summary.find("failures: none") == std::string::npos);
    // curve files still emitted, just empty of samples
    const CsvTable t =
        parse_csv(slurp(dir / "phillips_baseline_curve.csv"));
    CHECK(t.rows.empty());
}

TEST_CASE("flatten and ratio runs emit their experiment files") {
    RunConfig cfg =
        load_config(source_dir() / "presets" / "flatten_combined.json");
    const fs::path dir = fresh_dir("flatten");
    cfg.output.dir = dir.string();
    const RunReport rep = run_flatten(cfg);
    CHECK(fs::exists(dir / "flatten_combined_combined_base.csv"));
    CHECK(fs::exists(dir / "flatten_combined_combined_modified.csv"));
    CHECK(fs::exists(dir / "flatten_combined_combined_slopes.csv"));
    CHECK(fs::exists(dir / "flatten_combined_combined.svg"));
    REQUIRE(rep.notes.size() == 1);
    CHECK(rep.notes[0].find("max slope ratio") != std::string::npos);
    const CsvTable slopes =
        parse_csv(slurp(dir / "flatten_combined_combined_slopes.csv"));
    CHECK(slopes.rows.size() == 200);
    CHECK(slopes.column("ratio") == 3);

    RunConfig rcfg =
        load_config(source_dir() / "presets" / "ratio_surface.json");
    const fs::path rdir = fresh_dir("ratio");
    rcfg.output.dir = rdir.string();
    const RunReport rrep = run_ratio(rcfg);
    CHECK(fs::exists(rdir / "ratio_surface_slowdown_surface.csv"));
    CHECK(fs::exists(rdir / "ratio_surface_slowdown.svg"));
    const CsvTable surface =
        parse_csv(slurp(rdir / "ratio_surface_slowdown_surface.csv"));
    CHECK(surface.rows.size() == 7 * 61);
    bool has_target = false;
    bool has_r = false;
    for (const std::string& n : rrep.notes) {
        has_target = has_target || n.find("0.97572815534") != std::string::npos;
        has_r = has_r || n.find("1.0061617209") != std::string::npos;
    }
    CHECK(has_target);
    CHECK(has_r);

    RunConfig bare = parse_config(kMinimalConfig, "stub");
    CHECK_THROWS_AS(run_flatten(bare), ConfigError);
    CHECK_THROWS_AS(run_ratio(bare), ConfigError);
}

TEST_CASE("run_all chains curve and experiments into one report") {
    RunConfig cfg =
        load_config(source_dir() / "presets" / "flatten_combined.json");
    const fs::path dir = fresh_dir("all");
    cfg.output.dir = dir.string();
    const RunReport rep = run_all(cfg);
    CHECK(rep.files.size() == 7); // curve csv+svg, 3 experiment csv, svg, summary
    CHECK(fs::exists(dir / "flatten_combined_curve.csv"));
    CHECK(fs::exists(dir / "flatten_combined_summary.txt"));
}

TEST_CASE("a blocked output directory raises an io error") {
    const fs::path dir = fresh_dir("blocked");
    std::ofstream(dir / "blocker") << "x";
    RunConfig cfg = parse_config(kMinimalConfig, "stub");
    cfg.output.dir = (dir / "blocker" / "sub").string();
    CHECK_THROWS_AS(run_curve(cfg), IoError);
}

TEST_CASE("empirical series parse with row-level validation") {
    const char* text =
        "period,unemployment_rate,wage_growth\n"
        "1993Q1,2.5,1.8\n"
        "1993Q2,2.6,1.4\n"
        "1993Q3,2.7,1.1\n"
        "1993Q4,2.9,0.7\n"
        "1994Q1,3.0,0.9\n";
    const EmpiricalSeries s = parse_empirical(text);
    REQUIRE(s.points.size() == 5);
    CHECK(s.points[0].period == "1993Q1");
    CHECK(s.points[0].unemployment == 2.5);
    CHECK(s.points[4].wage_growth == 0.9);

    CHECK(parse_empirical("").points.empty());
    CHECK(parse_empirical("  \n \t\n").points.empty());

    CHECK_THROWS_WITH_AS(
        parse_empirical("period,unemployment_rate\n1993Q1,2.5\n"),
        doctest::Contains("wage_growth"), CsvError);
    try {
        parse_empirical(
            "period,unemployment_rate,wage_growth\n"
            "1993Q1,2.5,1.8\n"
            "1993Q2,2.6,oops\n");
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.row == 3);
    }
    try {
        parse_empirical(
            "period,unemployment_rate,wage_growth\n"
            "1993Q1,0.0,1.8\n");
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.row == 2);
        CHECK(std::string(e.what()).find("(0,100)") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_empirical("period,unemployment_rate,wage_growth\n"
                                    "1993Q1,250,1.8\n"),
                    CsvError);
    // extra columns are fine
    CHECK(parse_empirical("period,unemployment_rate,wage_growth,note\n"
                          "1993Q1,2.5,1.8,ok\n")
              .points.size() == 1);
}

TEST_CASE("overlay draws one marker per observation") {
    ModelParams p;
    const SweepSpec sweep{SweepVariable::L_over_L1, 1.05, 2.0, 50,
                          Spacing::linear};
    const PhillipsCurve curve = trace_curve(p, sweep, {});

    std::string text = "period,unemployment_rate,wage_growth\n";
    for (int i = 0; i < 157; ++i) {
        text += "q" + std::to_string(i) + "," +
                format_float(1.0 + 0.01 * i, 12) + "," +
                format_float(3.0 - 0.01 * i, 12) + "\n";
    }
    const EmpiricalSeries data = parse_empirical(text);
    REQUIRE(data.points.size() == 157);

    const std::string svg = overlay_svg(curve, data);
    CHECK(count_occurrences(svg, "class=\"pt\"") == 157);
    CHECK(svg.find("model (shape)") != std::string::npos);
    CHECK(svg.find("employment rate") != std::string::npos);

    const std::string bare = overlay_svg(curve, {});
    CHECK(count_occurrences(bare, "class=\"pt\"") == 0);
    CHECK(bare.find(">model<") != std::string::npos);
}

TEST_CASE("overlay runs read the data file and note its size") {
    RunConfig cfg =
        load_config(source_dir() / "presets" / "phillips_baseline.json");
    const fs::path dir = fresh_dir("overlay");
    cfg.output.dir = (dir / "out").string();
    const fs::path data = dir / "data.csv";
    std::ofstream(data) << "period,unemployment_rate,wage_growth\n"
                           "a,2.5,1.8\n"
                           "b,2.6,1.4\n"
                           "c,2.7,1.1\n"
                           "d,2.9,0.7\n"
                           "e,3.0,0.9\n";
    const RunReport rep = run_overlay(cfg, data);
    CHECK(fs::exists(dir / "out" / "phillips_baseline_overlay.svg"));
    bool noted = false;
    for (const std::string& n : rep.notes) {
        noted = noted || n.find("data points: 5") != std::string::npos;
    }
    CHECK(noted);
    CHECK_THROWS_AS(run_overlay(cfg, dir / "absent.csv"), IoError);
}

TEST_CASE("equilibrium description lists every headline quantity") {
    ModelParams p;
    const Equilibrium eq = solve_equilibrium(p);
    const std::string text = describe_equilibrium(eq, 12);
    CHECK(text.find("g = 0.25\n") != std::string::npos);
    CHECK(text.find("v = 0.948206741416\n") != std::string::npos);
    CHECK(text.find("w2 = 0.224774006117\n") != std::string::npos);
    CHECK(text.find("wbar1 = 0.502831069208\n") != std::string::npos);
    CHECK(text.find("Z = ") != std::string::npos);
    CHECK(count_occurrences(text, " = ") == 10);
}
