#include "selfemb/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "selfemb/car/matrix.hpp"
#include "selfemb/car/serialize.hpp"
#include "selfemb/car/verify.hpp"
#include "selfemb/chsh.hpp"
#include "selfemb/embezzle.hpp"
#include "selfemb/errors.hpp"
#include "selfemb/parallel.hpp"
#include "selfemb/qstate.hpp"
#include "selfemb/sampling.hpp"

namespace selfemb::cli {

using qstate::ProbDist;
using qstate::SchmidtVector;

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t require_seed(const ExperimentConfig& config) {
    if (!config.seed) {
        throw config_error("experiment '" + config.experiment + "' is randomized: --seed is required");
    }
    return *config.seed;
}

json seed_echo(const ExperimentConfig& config) {
    return config.seed ? json(*config.seed) : json(nullptr);
}

std::string join_probs(const ProbDist& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ';';
        out += format_double(p[i]);
    }
    return out;
}

void push_verdict(RunReport& report, std::string name, bool pass, std::string detail) {
    report.verdicts.push_back(Verdict{std::move(name), pass, std::move(detail)});
}

SchmidtVector geometric_catalyst(std::size_t n, double ratio) {
    std::vector<double> p(n);
    double sum = 0.0;
    double term = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        p[k] = term;
        sum += term;
        term *= ratio;
    }
    for (double& x : p) x /= sum;
    return qstate::schmidt_from_probs(ProbDist(std::move(p), qstate::kDerivedNormTol));
}

const double kEprFidelityAt2 = std::numbers::sqrt2 / 3.0 + 1.0 / 3.0;
const double kTwoSqrtTwo = 2.0 * std::numbers::sqrt2;

}  // namespace

RunReport run_e1_vdh(const ExperimentConfig& config) {
    Stopwatch timer;
    const int kmax = config.max_support.value_or(16);
    if (kmax < 1 || kmax > 20) {
        throw config_error("e1-vdh: max-support (the exponent cap) must lie in [1, 20]");
    }
    RunReport report;
    report.config = json{{"experiment", "e1-vdh"},
                         {"seed", seed_echo(config)},
                         {"max_support", kmax},
                         {"target", "epr"}};
    report.svg_x = "k";
    report.svg_y = "fidelity";

    const SchmidtVector epr({1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2});
    std::vector<double> fidelities;
    for (int k = 0; k <= kmax; ++k) {
        const std::size_t n = std::size_t{1} << k;
        const embezzle::VdhCatalyst catalyst(n);
        const double f = embezzle::embezzlement_fidelity(catalyst, epr);
        fidelities.push_back(f);
        report.rows.push_back(json{{"k", k},
                                   {"n", n},
                                   {"lambda1", catalyst.lambda1()},
                                   {"fidelity", f}});
    }

    bool nondecreasing = true;
    for (std::size_t i = 1; i < fidelities.size(); ++i) {
        if (fidelities[i] < fidelities[i - 1]) nondecreasing = false;
    }
    push_verdict(report, "curve_nondecreasing", nondecreasing,
                 "fidelity curve over n = 1..2^" + std::to_string(kmax));
    const double f2 = fidelities.size() > 1 ? fidelities[1] : 0.0;
    push_verdict(report, "n2_exact_value", std::abs(f2 - kEprFidelityAt2) <= 1e-9,
                 "fidelity(n=2) = " + format_double(f2) + ", expected " +
                     format_double(kEprFidelityAt2));

    report.summary = json{{"cases", report.rows.size()},
                          {"first_fidelity", fidelities.front()},
                          {"final_fidelity", fidelities.back()}};
    report.duration_seconds = timer.seconds();
    return report;
}

RunReport run_e2_nogo(const ExperimentConfig& config) {
    Stopwatch timer;
    const std::uint64_t seed = require_seed(config);
    const int cap = config.max_support.value_or(64);
    if (cap < 2 || cap > 64) {
        throw config_error("e2-nogo: max-support must lie in [2, 64]");
    }
    const std::uint64_t samples = config.samples.value_or(1000);

    RunReport report;
    report.config = json{{"experiment", "e2-nogo"},
                         {"seed", seed},
                         {"max_support", cap},
                         {"samples", samples}};
    report.svg_x = "case_index";
    report.svg_y = "fidelity_max";

    struct Case {
        std::string family;
        std::size_t n;
        double param;
        SchmidtVector lambda;
    };
    std::vector<Case> cases;
    cases.push_back({"point", 1, 0.0, SchmidtVector({1.0})});
    for (std::size_t n : {2, 4, 8, 16, 32, 64}) {
        if (n > static_cast<std::size_t>(cap)) break;
        cases.push_back({"uniform", n, 0.0, geometric_catalyst(n, 1.0)});
        for (int i = 1; i <= 19; ++i) {
            const double r = 0.05 * i;
            cases.push_back({"geometric", n, r, geometric_catalyst(n, r)});
        }
    }
    for (std::size_t n = 2; n <= static_cast<std::size_t>(cap); ++n) {
        cases.push_back({"vdh", n, 0.0, embezzle::vdh_catalyst(n).materialize()});
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        SchmidtVector lambda =
            sampling::random_admissible_catalyst(rng, static_cast<std::size_t>(cap));
        cases.push_back({"random", lambda.size(), 0.0, std::move(lambda)});
    }

    const auto reports = parallel_map(cases.size(), [&](std::size_t i) {
        return embezzle::analyze_catalyst(cases[i].lambda);
    });

    bool bounds_ok = true;
    bool identity_ok = true;
    bool point_flagged = false;
    std::size_t admissible_count = 0;
    double max_admissible_fidelity = 0.0;
    double min_admissible_distance = 1.0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const auto& r = reports[i];
        report.rows.push_back(json{{"case_index", i},
                                   {"family", c.family},
                                   {"n", c.n},
                                   {"param", c.param},
                                   {"lambda1", r.lambda1},
                                   {"fidelity_max", r.fidelity_max},
                                   {"trace_distance_min", r.trace_distance_min},
                                   {"lemma_distance", r.lemma_distance},
                                   {"admissible", r.admissible},
                                   {"bound_satisfied", r.bound_satisfied}});
        if (std::abs(r.trace_distance_min -
                     qstate::trace_distance_from_fidelity(r.fidelity_max)) > 1e-10) {
            identity_ok = false;
        }
        if (c.family == "point" && !r.admissible) point_flagged = true;
        if (r.admissible) {
            ++admissible_count;
            max_admissible_fidelity = std::max(max_admissible_fidelity, r.fidelity_max);
            min_admissible_distance = std::min(min_admissible_distance, r.trace_distance_min);
            if (!r.bound_satisfied || r.fidelity_max > embezzle::kFidelityCeiling ||
                r.lemma_distance < embezzle::kDistanceBound - embezzle::kBoundSlack) {
                bounds_ok = false;
            }
        }
    }

    push_verdict(report, "admissible_bounds", bounds_ok,
                 "max fidelity " + format_double(max_admissible_fidelity) + ", min distance " +
                     format_double(min_admissible_distance) + " over " +
                     std::to_string(admissible_count) + " admissible catalysts");
    push_verdict(report, "point_mass_inadmissible", point_flagged, "lambda = (1) must be gated");
    push_verdict(report, "distance_fidelity_identity", identity_ok,
                 "trace_distance_min == sqrt(1 - fidelity_max^2) within 1e-10");
    push_verdict(report, "admissible_sample_count", admissible_count >= samples,
                 std::to_string(admissible_count) + " admissible cases (requested " +
                     std::to_string(samples) + " random ones)");

    report.summary = json{{"cases", report.rows.size()},
                          {"admissible", admissible_count},
                          {"max_admissible_fidelity", max_admissible_fidelity},
                          {"min_admissible_distance", min_admissible_distance}};
    report.duration_seconds = timer.seconds();
    return report;
}

RunReport run_e3_lemma(const ExperimentConfig& config) {
    Stopwatch timer;
    const double step = config.grid_step.value_or(1.0 / 12.0);
    const int max_support = config.max_support.value_or(8);
    if (max_support < 1 || max_support > 64) {
        throw config_error("e3-lemma: max-support must lie in [1, 64]");
    }

    RunReport report;
    report.config = json{{"experiment", "e3-lemma"},
                         {"seed", seed_echo(config)},
                         {"grid_step", step},
                         {"max_support", max_support}};
    report.svg_x = "case_index";
    report.svg_y = "distance";

    const auto rows = embezzle::lemma_scan(step, static_cast<std::size_t>(max_support));
    std::size_t counterexamples = 0;
    double min_distance = 1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        report.rows.push_back(json{{"case_index", i},
                                   {"p", join_probs(r.p)},
                                   {"support", r.p.size()},
                                   {"distance", r.distance},
                                   {"mu", r.mu},
                                   {"m", r.m},
                                   {"counterexample", r.counterexample}});
        if (r.counterexample) ++counterexamples;
        min_distance = std::min(min_distance, r.distance);
    }

    // Independent oracle at support <= 3 on the same grid.
    const auto q = static_cast<unsigned>(std::llround(1.0 / step));
    const auto oracle_dists = embezzle::grid_distributions(
        q, std::min<std::size_t>(3, static_cast<std::size_t>(max_support)));
    const auto diffs = parallel_map(oracle_dists.size(), [&](std::size_t i) {
        return std::abs(embezzle::brute_force_rearrangement_min(oracle_dists[i]) -
                        embezzle::min_rearrangement_distance(oracle_dists[i]));
    });
    double oracle_max_diff = 0.0;
    for (double d : diffs) oracle_max_diff = std::max(oracle_max_diff, d);

    push_verdict(report, "zero_counterexamples", counterexamples == 0,
                 std::to_string(counterexamples) + " rows below 2/9 - 1e-9 out of " +
                     std::to_string(rows.size()));
    push_verdict(report, "oracle_agreement", oracle_max_diff <= 1e-12,
                 "max |brute - sorted| = " + format_double(oracle_max_diff) + " over " +
                     std::to_string(oracle_dists.size()) + " support<=3 cases");

    report.summary = json{{"cases", rows.size()},
                          {"min_distance", min_distance},
                          {"oracle_cases", oracle_dists.size()},
                          {"oracle_max_diff", oracle_max_diff}};
    report.duration_seconds = timer.seconds();
    return report;
}

namespace {

void purity_row(RunReport& report, const car::PairingState& state, const std::string& label,
                const std::vector<car::Site>& window, double expected, bool& all_ok) {
    const Eigen::MatrixXcd rho = car::restrict_density(state, window);
    const car::Purity purity = car::purity_check(rho);
    const bool ok = std::abs(purity.purity - expected) <= 1e-9;
    all_ok = all_ok && ok;
    report.rows.push_back(json{{"case", "purity:" + state.name() + ":" + label},
                               {"w", window.size()},
                               {"enumerated", 0},
                               {"sampled", 0},
                               {"mismatches", 0},
                               {"value", purity.purity},
                               {"expected", expected},
                               {"pass", ok},
                               {"detail", purity.is_pure ? "pure" : "mixed"}});
}

}  // namespace

RunReport run_e4_car(const ExperimentConfig& config) {
    Stopwatch timer;
    const std::uint64_t seed = require_seed(config);
    const int w_cap = config.window.value_or(8);
    if (w_cap < 1 || w_cap > 16) {
        throw config_error("e4-car: window must lie in [1, 16]");
    }
    const std::uint64_t samples = config.samples.value_or(100000);

    RunReport report;
    report.config = json{{"experiment", "e4-car"},
                         {"seed", seed},
                         {"window", w_cap},
                         {"samples", samples},
                         {"extra_generators", config.extra_generators}};

    std::vector<std::int64_t> widths;
    for (std::int64_t w : {2, 4, 8}) {
        if (w <= w_cap) widths.push_back(w);
    }
    if (widths.empty() || widths.back() != w_cap) widths.push_back(w_cap);

    const car::SitePermutation sigma = car::SitePermutation::canonical_sigma();
    bool verify_ok = true;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        car::VerificationConfig vc;
        vc.window_halfwidth = widths[i];
        vc.max_weight = 2;
        vc.sample_count = samples;
        vc.seed = seed + i;  // distinct stream per window row
        const car::VerificationReport vr = car::verify_self_embezzlement(vc, sigma);
        verify_ok = verify_ok && vr.passed();
        report.rows.push_back(json{{"case", "verify:W=" + std::to_string(widths[i])},
                                   {"w", widths[i]},
                                   {"enumerated", vr.enumerated},
                                   {"sampled", vr.sampled},
                                   {"mismatches", vr.mismatches},
                                   {"value", 0.0},
                                   {"expected", 0.0},
                                   {"pass", vr.passed()},
                                   {"detail", vr.first_counterexample.value_or("")}});
    }
    push_verdict(report, "zero_mismatches", verify_ok,
                 "exact transported-generator equality over all windows");

    // CHSH inside the algebra on one catalyst pair, and the matrix path on
    // the same settings.
    const car::PairingState initial = car::PairingState::initial();
    const double abstract_value = chsh::chsh_value_abstract(
        initial, chsh::standard_abstract_settings(car::site(car::Reg::A1, -1),
                                                  car::site(car::Reg::B1, -1)));
    Eigen::VectorXcd epr(4);
    epr << 1.0 / std::numbers::sqrt2, 0, 0, 1.0 / std::numbers::sqrt2;
    const double matrix_value =
        chsh::chsh_value_matrix(epr, chsh::standard_matrix_settings(), chsh::Bipartition{2, 2});
    const bool abstract_ok = std::abs(abstract_value - kTwoSqrtTwo) <= 1e-12;
    const bool agree_ok = std::abs(abstract_value - matrix_value) <= 1e-12;
    report.rows.push_back(json{{"case", "chsh:abstract"},
                               {"w", 0},
                               {"enumerated", 0},
                               {"sampled", 0},
                               {"mismatches", 0},
                               {"value", abstract_value},
                               {"expected", kTwoSqrtTwo},
                               {"pass", abstract_ok},
                               {"detail", "violation factor " +
                                              format_double(chsh::violation_factor(abstract_value))}});
    report.rows.push_back(json{{"case", "chsh:matrix"},
                               {"w", 0},
                               {"enumerated", 0},
                               {"sampled", 0},
                               {"mismatches", 0},
                               {"value", matrix_value},
                               {"expected", kTwoSqrtTwo},
                               {"pass", agree_ok},
                               {"detail", "matrix path on the same settings"}});
    push_verdict(report, "abstract_chsh_tsirelson", abstract_ok,
                 "value " + format_double(abstract_value));
    push_verdict(report, "matrix_path_agreement", agree_ok,
                 "abstract vs matrix difference " +
                     format_double(std::abs(abstract_value - matrix_value)));

    // Purity battery: pair-respecting windows are pure, half pairs maximally mixed.
    using car::Reg;
    using car::site;
    const car::PairingState target = car::PairingState::target();
    const car::PairingState vacuum = car::PairingState::vacuum();
    bool purity_ok = true;
    purity_row(report, initial, "one-pair", {site(Reg::A1, -1), site(Reg::B1, -1)}, 1.0,
               purity_ok);
    purity_row(report, initial, "two-pairs",
               {site(Reg::A1, -2), site(Reg::A1, -1), site(Reg::B1, -2), site(Reg::B1, -1)}, 1.0,
               purity_ok);
    purity_row(report, initial, "three-pairs",
               {site(Reg::A1, -3), site(Reg::A1, -2), site(Reg::A1, -1), site(Reg::B1, -3),
                site(Reg::B1, -2), site(Reg::B1, -1)},
               1.0, purity_ok);
    purity_row(report, initial, "pair-plus-zero",
               {site(Reg::A1, 0), site(Reg::A1, -1), site(Reg::B1, -1)}, 1.0, purity_ok);
    purity_row(report, initial, "half-pair", {site(Reg::A1, -1)}, 0.5, purity_ok);
    purity_row(report, target, "second-register-pair", {site(Reg::A2, -1), site(Reg::B2, -1)},
               1.0, purity_ok);
    purity_row(report, target, "mixed-registers",
               {site(Reg::A1, -1), site(Reg::A2, -1), site(Reg::B1, -1), site(Reg::B2, -1)}, 1.0,
               purity_ok);
    purity_row(report, target, "half-pair", {site(Reg::A2, -3)}, 0.5, purity_ok);
    purity_row(report, vacuum, "zeros", {site(Reg::A1, 0), site(Reg::B2, 5)}, 1.0, purity_ok);
    push_verdict(report, "purity_battery", purity_ok,
                 "pair-respecting windows pure, half pairs at 1/2");

    if (!config.extra_generators.empty()) {
        const auto generators = car::parse_generator_file(config.extra_generators);
        const car::VerificationReport vr = car::verify_generators(generators, sigma);
        report.rows.push_back(json{{"case", "verify:extra-generators"},
                                   {"w", 0},
                                   {"enumerated", vr.enumerated},
                                   {"sampled", 0},
                                   {"mismatches", vr.mismatches},
                                   {"value", 0.0},
                                   {"expected", 0.0},
                                   {"pass", vr.passed()},
                                   {"detail", vr.first_counterexample.value_or("")}});
        push_verdict(report, "extra_generators", vr.passed(),
                     std::to_string(generators.size()) + " generators from " +
                         config.extra_generators);
    }

    report.summary = json{{"cases", report.rows.size()},
                          {"abstract_chsh", abstract_value},
                          {"violation_factor", chsh::violation_factor(abstract_value)}};
    report.duration_seconds = timer.seconds();
    return report;
}

RunReport run_e5_channel(const ExperimentConfig& config) {
    Stopwatch timer;
    const std::uint64_t seed = require_seed(config);
    const std::uint64_t pairs = config.samples.value_or(1000);
    const std::uint64_t props = 10 * pairs;
    const int gamma_cap = config.max_support.value_or(8);
    if (gamma_cap < 1 || gamma_cap > 8) {
        throw config_error("e5-channel: max-support (gamma support cap) must lie in [1, 8]");
    }

    RunReport report;
    report.config = json{{"experiment", "e5-channel"},
                         {"seed", seed},
                         {"samples", pairs},
                         {"proposition_samples", props},
                         {"max_support", gamma_cap}};

    std::mt19937_64 rng(seed);

    struct PairCase {
        SchmidtVector lambda;
        SchmidtVector gamma;
    };
    std::vector<PairCase> pair_cases;
    pair_cases.reserve(pairs);
    for (std::uint64_t i = 0; i < pairs; ++i) {
        SchmidtVector lambda = sampling::random_admissible_catalyst(rng, 64);
        SchmidtVector gamma = sampling::random_schmidt(
            rng, 1 + sampling::uniform_index(rng, static_cast<std::size_t>(gamma_cap)));
        pair_cases.push_back(PairCase{std::move(lambda), std::move(gamma)});
    }

    struct PairResult {
        double channel;
        double unitary;
    };
    const auto pair_results = parallel_map(pair_cases.size(), [&](std::size_t i) {
        return PairResult{embezzle::channel_selfembezzlement_fidelity(pair_cases[i].lambda,
                                                                      pair_cases[i].gamma),
                          embezzle::self_embezzlement_fidelity(pair_cases[i].lambda)};
    });

    bool channel_bound_ok = true;
    bool dominance_ok = true;
    double max_channel = 0.0;
    for (std::size_t i = 0; i < pair_cases.size(); ++i) {
        const auto& c = pair_cases[i];
        const auto& r = pair_results[i];
        const double distance = qstate::trace_distance_from_fidelity(r.channel);
        const bool bound_ok = r.channel <= embezzle::kFidelityCeiling &&
                              distance >= embezzle::kDistanceBound - embezzle::kBoundSlack;
        channel_bound_ok = channel_bound_ok && bound_ok;
        dominance_ok = dominance_ok && r.channel <= r.unitary + 1e-12;
        max_channel = std::max(max_channel, r.channel);
        report.rows.push_back(json{{"case", "channel:" + std::to_string(i)},
                                   {"lambda_support", c.lambda.size()},
                                   {"gamma_support", c.gamma.size()},
                                   {"lambda1", c.lambda.lambda1()},
                                   {"gamma1", c.gamma.lambda1()},
                                   {"channel_fidelity", r.channel},
                                   {"unitary_fidelity", r.unitary},
                                   {"trace_distance", distance},
                                   {"eps", 0.0},
                                   {"overlap", 0.0},
                                   {"pass", bound_ok}});
    }

    // Trivial environment: gamma = (1) must reduce to the unitary case exactly.
    bool identity_ok = true;
    const SchmidtVector unit_gamma({1.0});
    for (int i = 0; i < 3; ++i) {
        const SchmidtVector lambda = sampling::random_admissible_catalyst(rng, 64);
        const double channel = embezzle::channel_selfembezzlement_fidelity(lambda, unit_gamma);
        const double unitary = embezzle::self_embezzlement_fidelity(lambda);
        const bool ok = channel == unitary;
        identity_ok = identity_ok && ok;
        report.rows.push_back(json{{"case", "gamma-identity:" + std::to_string(i)},
                                   {"lambda_support", lambda.size()},
                                   {"gamma_support", 1},
                                   {"lambda1", lambda.lambda1()},
                                   {"gamma1", 1.0},
                                   {"channel_fidelity", channel},
                                   {"unitary_fidelity", unitary},
                                   {"trace_distance",
                                    qstate::trace_distance_from_fidelity(channel)},
                                   {"eps", 0.0},
                                   {"overlap", 0.0},
                                   {"pass", ok}});
    }

    std::vector<sampling::PropositionInstance> instances;
    instances.reserve(props);
    for (std::uint64_t i = 0; i < props; ++i) {
        instances.push_back(sampling::make_proposition_instance(rng));
    }
    const auto overlaps = parallel_map(instances.size(), [&](std::size_t i) {
        return embezzle::nearest_product_extension(instances[i].phi, instances[i].psi).overlap;
    });
    bool prop_ok = true;
    double min_margin = 1.0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const double eps = instances[i].eps;
        const double overlap = overlaps[i];
        const bool ok = overlap > 1.0 - 2.0 * eps;
        prop_ok = prop_ok && ok;
        min_margin = std::min(min_margin, overlap - (1.0 - 2.0 * eps));
        report.rows.push_back(json{{"case", "prop:" + std::to_string(i)},
                                   {"lambda_support", 0},
                                   {"gamma_support", 0},
                                   {"lambda1", 0.0},
                                   {"gamma1", 0.0},
                                   {"channel_fidelity", 0.0},
                                   {"unitary_fidelity", 0.0},
                                   {"trace_distance", 0.0},
                                   {"eps", eps},
                                   {"overlap", overlap},
                                   {"pass", ok}});
    }

    push_verdict(report, "channel_bound", channel_bound_ok,
                 "max channel fidelity " + format_double(max_channel) + " over " +
                     std::to_string(pairs) + " pairs");
    push_verdict(report, "channel_below_unitary", dominance_ok,
                 "channel fidelity never exceeds the unitary optimum");
    push_verdict(report, "gamma_identity_exact", identity_ok,
                 "gamma = (1) reproduces the unitary case exactly");
    push_verdict(report, "proposition_overlap", prop_ok,
                 "min overlap margin above 1 - 2 eps: " + format_double(min_margin) + " over " +
                     std::to_string(props) + " purifications");

    report.summary = json{{"cases", report.rows.size()},
                          {"max_channel_fidelity", max_channel},
                          {"min_proposition_margin", min_margin}};
    report.duration_seconds = timer.seconds();
    return report;
}

RunReport run_experiment(const ExperimentConfig& config) {
    if (config.experiment == "e1-vdh") return run_e1_vdh(config);
    if (config.experiment == "e2-nogo") return run_e2_nogo(config);
    if (config.experiment == "e3-lemma") return run_e3_lemma(config);
    if (config.experiment == "e4-car") return run_e4_car(config);
    if (config.experiment == "e5-channel") return run_e5_channel(config);
    throw config_error("unknown experiment '" + config.experiment + "'");
}

RunReport merge_reports(const std::vector<std::string>& json_paths) {
    Stopwatch timer;
    if (json_paths.empty()) {
        throw config_error("report: at least one input JSON report is required");
    }
    RunReport merged;
    json inputs = json::array();
    for (const std::string& p : json_paths) inputs.push_back(p);
    merged.config = json{{"experiment", "report"}, {"inputs", inputs}};

    bool all_pass = true;
    for (const std::string& path : json_paths) {
        std::ifstream in(path);
        if (!in) throw config_error("report: cannot open '" + path + "'");
        json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw config_error("report: '" + path + "' is not valid JSON: " + e.what());
        }
        const std::string experiment =
            doc.contains("config") && doc["config"].contains("experiment")
                ? doc["config"]["experiment"].get<std::string>()
                : "unknown";
        const bool pass = doc.value("pass", false);
        std::string failed;
        if (doc.contains("verdicts")) {
            for (const json& v : doc["verdicts"]) {
                if (!v.value("pass", false)) {
                    if (!failed.empty()) failed += ";";
                    failed += v.value("name", "?");
                }
            }
        }
        all_pass = all_pass && pass;
        merged.rows.push_back(json{{"file", path},
                                   {"experiment", experiment},
                                   {"rows", doc.contains("rows") ? doc["rows"].size() : 0},
                                   {"pass", pass},
                                   {"failed_verdicts", failed}});
        merged.verdicts.push_back(Verdict{"report:" + experiment + ":" + path, pass,
                                          failed.empty() ? "all verdicts pass" : failed});
    }
    merged.summary = json{{"reports", json_paths.size()}, {"all_pass", all_pass}};
    merged.duration_seconds = timer.seconds();
    return merged;
}

}  // namespace selfemb::cli
