#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selfemb/errors.hpp"
#include "selfemb/experiments.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailure = 2;
constexpr int kExitConfigError = 3;
constexpr int kExitCapExceeded = 4;

void print_report(const selfemb::cli::RunReport& report) {
    for (const auto& v : report.verdicts) {
        std::printf("[%s] %-32s %s\n", v.pass ? "PASS" : "FAIL", v.name.c_str(),
                    v.detail.c_str());
    }
    std::fprintf(stderr, "completed in %.3f s (%zu rows)\n", report.duration_seconds,
                 report.rows.size());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embezzlement bounds and exact CAR-algebra verification"};
    app.set_config("--config", "", "Flat key=value config file; flags override it");
    app.fallthrough();

    selfemb::cli::ExperimentConfig config;
    std::vector<std::string> report_inputs;

    app.add_option("--experiment", config.experiment,
                   "Experiment id (e1-vdh, e2-nogo, e3-lemma, e4-car, e5-channel)");
    app.add_option("--seed", config.seed, "RNG seed (required for randomized experiments)");
    app.add_option("--grid-step", config.grid_step, "Simplex grid step (reciprocal integer)");
    app.add_option("--max-support", config.max_support,
                   "Support / size cap (e1: exponent cap; e5: gamma support cap)");
    app.add_option("--window", config.window, "CAR window half-width");
    app.add_option("--samples", config.samples, "Random sample count");
    app.add_option("--out", config.out, "Output path base (extension per format)");
    app.add_option("--format", config.formats, "Output formats: csv, json, svg")
        ->delimiter(',');
    app.add_option("--extra-generators", config.extra_generators,
                   "Generator fixture file checked by e4-car");

    for (const char* name :
         {"e1-vdh", "e2-nogo", "e3-lemma", "e4-car", "e5-channel"}) {
        auto* sub = app.add_subcommand(name, std::string("Run experiment ") + name);
        sub->fallthrough();
        sub->callback([&config, name] { config.experiment = name; });
    }
    auto* report_sub = app.add_subcommand("report", "Merge JSON reports into one summary");
    report_sub->fallthrough();
    report_sub->add_option("inputs", report_inputs, "JSON reports to merge")->required();
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfigError;
    }

    try {
        selfemb::cli::RunReport report;
        if (report_sub->parsed()) {
            config.experiment = "report";
            report = selfemb::cli::merge_reports(report_inputs);
        } else {
            if (config.experiment.empty()) {
                throw selfemb::config_error(
                    "no experiment selected (use a subcommand, --experiment, or a config file)");
            }
            report = selfemb::cli::run_experiment(config);
        }
        if (config.out.empty()) {
            config.out = "report_" + config.experiment;
        }
        const auto written = selfemb::cli::write_outputs(report, config);
        print_report(report);
        for (const auto& path : written) {
            std::fprintf(stderr, "wrote %s\n", path.c_str());
        }
        return report.all_pass() ? kExitPass : kExitVerdictFailure;
    } catch (const selfemb::size_error& e) {
        std::fprintf(stderr, "resource cap exceeded: %s\n", e.what());
        return kExitCapExceeded;
    } catch (const selfemb::config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
