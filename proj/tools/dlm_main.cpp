#include "dlm/run.hpp"

#include "dlm/csv.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{"dual labor market wage curves"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> formats;
    int precision = 0;
    std::string data_path;

    const auto add_common = [&](CLI::App* cmd, bool with_output) {
        cmd->add_option("--config", config_path, "model config (JSON)")
            ->required();
        if (with_output) {
            cmd->add_option("--out", out_dir,
                            "output directory (overrides the config)");
            cmd->add_option("--format", formats,
                            "output formats: csv, svg (overrides the config)")
                ->check(CLI::IsMember({"csv", "svg"}));
        }
        cmd->add_option("--precision", precision,
                        "significant digits for printed numbers")
            ->check(CLI::Range(6, 17));
    };

    CLI::App* solve =
        app.add_subcommand("solve", "solve one equilibrium and print it");
    add_common(solve, false);
    CLI::App* curve =
        app.add_subcommand("curve", "trace the wage curve of the config");
    add_common(curve, true);
    CLI::App* flatten = app.add_subcommand(
        "flatten", "run the config's slope-comparison experiments");
    add_common(flatten, true);
    CLI::App* ratio = app.add_subcommand(
        "ratio", "run the config's ratio-decomposition experiments");
    add_common(ratio, true);
    CLI::App* overlay = app.add_subcommand(
        "overlay", "plot empirical data over the model curve");
    add_common(overlay, true);
    overlay->add_option("--data", data_path,
                        "CSV with period, unemployment_rate, wage_growth")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    dlm::RunConfig cfg = dlm::load_config(config_path);
    if (!out_dir.empty()) {
        cfg.output.dir = out_dir;
    }
    if (!formats.empty()) {
        cfg.output.csv = cfg.output.svg = false;
        for (const std::string& f : formats) {
            (f == "csv" ? cfg.output.csv : cfg.output.svg) = true;
        }
    }
    if (precision != 0) {
        cfg.output.precision = precision;
    }

    if (solve->parsed()) {
        const dlm::Equilibrium eq =
            dlm::solve_equilibrium(cfg.params, cfg.solver);
        dlm::verify_equilibrium(eq, cfg.params);
        std::cout << dlm::describe_equilibrium(eq, cfg.output.precision);
        return 0;
    }

    dlm::RunReport report;
    if (curve->parsed()) {
        report = dlm::run_curve(cfg);
    } else if (flatten->parsed()) {
        report = dlm::run_flatten(cfg);
    } else if (ratio->parsed()) {
        report = dlm::run_ratio(cfg);
    } else {
        report = dlm::run_overlay(cfg, data_path);
    }
    for (const std::string& note : report.notes) {
        std::cout << note << "\n";
    }
    for (const std::string& file : report.files) {
        std::cout << "wrote " << file << "\n";
    }
    if (!report.failures.empty()) {
        for (const std::string& f : report.failures) {
            std::cerr << "solver failure: " << f << "\n";
        }
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const dlm::SolverFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dlm::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dlm::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dlm::CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
