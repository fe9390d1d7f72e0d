#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace selfemb::cli {

using json = nlohmann::ordered_json;

// Shared knobs for every experiment; per-experiment defaults are applied by
// the runners. Seeds are mandatory wherever randomness is involved, and no
// environment variable influences a run.
struct ExperimentConfig {
    std::string experiment;
    std::optional<std::uint64_t> seed;
    std::optional<double> grid_step;
    std::optional<int> max_support;
    std::optional<int> window;
    std::optional<std::uint64_t> samples;
    std::string out;
    std::vector<std::string> formats = {"csv", "json"};
    std::string extra_generators;  // e4-car only
};

struct Verdict {
    std::string name;
    bool pass;
    std::string detail;
};

// Everything a run emits. Reports are bit-identical across re-runs with the
// same config and seed; the wall-clock duration is therefore kept out of the
// serialized forms and only printed to the console.
struct RunReport {
    json config;
    std::vector<json> rows;
    json summary;
    std::vector<Verdict> verdicts;
    double duration_seconds = 0.0;
    std::string svg_x;  // row keys charted by the SVG writer; empty = no chart
    std::string svg_y;

    bool all_pass() const;
    json to_json() const;
    std::string to_csv() const;
    std::string to_svg() const;
};

RunReport run_e1_vdh(const ExperimentConfig& config);
RunReport run_e2_nogo(const ExperimentConfig& config);
RunReport run_e3_lemma(const ExperimentConfig& config);
RunReport run_e4_car(const ExperimentConfig& config);
RunReport run_e5_channel(const ExperimentConfig& config);

// Dispatches on config.experiment.
RunReport run_experiment(const ExperimentConfig& config);

// Combines previously written JSON reports into one summary.
RunReport merge_reports(const std::vector<std::string>& json_paths);

// Writes <out>.<format> for every configured format; returns the paths.
std::vector<std::string> write_outputs(const RunReport& report, const ExperimentConfig& config);

// 15-significant-digit decimal used by the CSV writer.
std::string format_double(double value);

}  // namespace selfemb::cli
