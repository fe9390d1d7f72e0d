#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "selfemb/car/automorphism.hpp"
#include "selfemb/car/pauli.hpp"
#include "selfemb/car/states.hpp"

namespace selfemb::car {

struct VerificationConfig {
    std::int64_t window_halfwidth = 8;   // sites with index in [-W, W)
    int max_weight = 2;                  // full enumeration weight cap
    std::size_t sample_count = 100000;   // random generators on top
    std::uint64_t seed = 0;
    int sample_max_weight = 16;
};

struct VerificationReport {
    VerificationConfig config;
    std::size_t enumerated = 0;
    std::size_t sampled = 0;
    std::size_t mismatches = 0;
    std::optional<std::string> first_counterexample;  // serialized generator

    bool passed() const { return mismatches == 0; }
};

// One transported-generator check with exact integer arithmetic:
//   initial(alpha(g)) == target(g),
// where alpha relabels each party's sites by sigma.
bool check_generator(const SitePermutation& sigma, const PauliString& g);

// Checks every generator over sites in [-W, W) of the four registers with
// weight <= max_weight, then sample_count seeded random generators with
// weight <= sample_max_weight. A mismatch is reported, not thrown.
VerificationReport verify_self_embezzlement(const VerificationConfig& config,
                                            const SitePermutation& sigma);
VerificationReport verify_self_embezzlement(const VerificationConfig& config);

// Checks an explicit list of generators (e.g. parsed from a fixture file).
VerificationReport verify_generators(const std::vector<PauliString>& generators,
                                     const SitePermutation& sigma);

// All sites of the four registers with index in [-W, W), in canonical order.
std::vector<Site> window_sites(std::int64_t window_halfwidth);

// Uniform random generator: weight uniform in [1, max_weight], distinct
// sites uniform in the window, letters uniform in {X, Z, XZ}. Raw engine
// draws only, so sampling is reproducible across standard libraries.
PauliString random_generator(std::mt19937_64& rng, const std::vector<Site>& window,
                             int max_weight);

}  // namespace selfemb::car
