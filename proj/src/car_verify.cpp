#include "selfemb/car/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "selfemb/car/serialize.hpp"
#include "selfemb/errors.hpp"
#include "selfemb/parallel.hpp"

namespace selfemb::car {

namespace {

constexpr std::size_t kEnumerationCap = 20'000'000;

bool transported_match(const PairingState& initial, const PairingState& target,
                       const SitePermutation& sigma, const PauliString& g) {
    return initial.eval(apply_automorphism(sigma, g)) == target.eval(g);
}

// Combinations of window sites up to max_weight, each dressed with every
// letter assignment (3 per site). Emits the identity first.
void enumerate_generators(const std::vector<Site>& sites, int max_weight,
                          std::vector<PauliString>& out) {
    out.emplace_back();  // identity
    const std::size_t n = sites.size();
    std::vector<std::size_t> combo;
    std::vector<std::pair<Site, Letter>> letters;

    auto emit_letters = [&](auto&& self, std::size_t depth) -> void {
        if (depth == combo.size()) {
            out.push_back(PauliString::from_letters(letters));
            return;
        }
        for (std::uint8_t bits = 1; bits <= 3; ++bits) {
            letters.emplace_back(sites[combo[depth]], static_cast<Letter>(bits));
            self(self, depth + 1);
            letters.pop_back();
        }
    };
    auto choose = [&](auto&& self, std::size_t next) -> void {
        if (!combo.empty()) {
            emit_letters(emit_letters, 0);
            if (out.size() > kEnumerationCap) {
                throw size_error("verify_self_embezzlement: enumeration exceeds cap");
            }
        }
        if (combo.size() == static_cast<std::size_t>(max_weight)) return;
        for (std::size_t i = next; i < n; ++i) {
            combo.push_back(i);
            self(self, i + 1);
            combo.pop_back();
        }
    };
    choose(choose, 0);
}

}  // namespace

std::vector<Site> window_sites(std::int64_t window_halfwidth) {
    std::vector<Site> sites;
    sites.reserve(static_cast<std::size_t>(8 * window_halfwidth));
    for (Reg r : {Reg::A1, Reg::A2, Reg::B1, Reg::B2}) {
        for (std::int64_t i = -window_halfwidth; i < window_halfwidth; ++i) {
            sites.push_back(site(r, i));
        }
    }
    return sites;
}

PauliString random_generator(std::mt19937_64& rng, const std::vector<Site>& window,
                             int max_weight) {
    if (window.empty()) throw std::invalid_argument("random_generator: empty window");
    const auto limit = std::min<std::size_t>(static_cast<std::size_t>(max_weight), window.size());
    const std::size_t weight = 1 + static_cast<std::size_t>(rng() % limit);
    // Partial Fisher-Yates over a copy picks distinct sites.
    std::vector<Site> pool = window;
    std::vector<std::pair<Site, Letter>> letters;
    letters.reserve(weight);
    for (std::size_t k = 0; k < weight; ++k) {
        const std::size_t pick = k + static_cast<std::size_t>(rng() % (pool.size() - k));
        std::swap(pool[k], pool[pick]);
        const auto l = static_cast<Letter>(1 + rng() % 3);
        letters.emplace_back(pool[k], l);
    }
    return PauliString::from_letters(std::move(letters));
}

bool check_generator(const SitePermutation& sigma, const PauliString& g) {
    return transported_match(PairingState::initial(), PairingState::target(), sigma, g);
}

VerificationReport verify_generators(const std::vector<PauliString>& generators,
                                     const SitePermutation& sigma) {
    const PairingState initial = PairingState::initial();
    const PairingState target = PairingState::target();
    const std::vector<char> ok = parallel_map(generators.size(), [&](std::size_t i) {
        return static_cast<char>(transported_match(initial, target, sigma, generators[i]));
    });
    VerificationReport report;
    report.enumerated = generators.size();
    for (std::size_t i = 0; i < ok.size(); ++i) {
        if (!ok[i]) {
            ++report.mismatches;
            if (!report.first_counterexample) {
                report.first_counterexample = format_generator(generators[i]);
            }
        }
    }
    return report;
}

VerificationReport verify_self_embezzlement(const VerificationConfig& config,
                                            const SitePermutation& sigma) {
    if (config.window_halfwidth < 1) {
        throw std::invalid_argument("verify_self_embezzlement: window must be >= 1");
    }
    const std::vector<Site> sites = window_sites(config.window_halfwidth);

    std::vector<PauliString> generators;
    enumerate_generators(sites, config.max_weight, generators);
    const std::size_t enumerated = generators.size();

    std::mt19937_64 rng(config.seed);
    generators.reserve(generators.size() + config.sample_count);
    for (std::size_t k = 0; k < config.sample_count; ++k) {
        generators.push_back(random_generator(rng, sites, config.sample_max_weight));
    }

    VerificationReport report = verify_generators(generators, sigma);
    report.config = config;
    report.enumerated = enumerated;
    report.sampled = config.sample_count;
    return report;
}

VerificationReport verify_self_embezzlement(const VerificationConfig& config) {
    return verify_self_embezzlement(config, SitePermutation::canonical_sigma());
}

}  // namespace selfemb::car
