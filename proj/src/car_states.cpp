#include "selfemb/car/states.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace selfemb::car {

PairingState::PairingState(std::string name, PartnerFn partner)
    : name_(std::move(name)), partner_(std::move(partner)) {}

PairingState PairingState::vacuum() {
    return PairingState("vacuum", [](const Site&) { return std::nullopt; });
}

PairingState PairingState::initial() {
    return PairingState("initial", [](const Site& s) -> std::optional<Site> {
        if (s.index >= 0 || slot_of(s.reg) != 1) return std::nullopt;
        return site(s.reg == Reg::A1 ? Reg::B1 : Reg::A1, s.index);
    });
}

PairingState PairingState::target() {
    return PairingState("target", [](const Site& s) -> std::optional<Site> {
        if (s.index >= 0) return std::nullopt;
        switch (s.reg) {
            case Reg::A1: return site(Reg::B1, s.index);
            case Reg::B1: return site(Reg::A1, s.index);
            case Reg::A2: return site(Reg::B2, s.index);
            case Reg::B2: return site(Reg::A2, s.index);
        }
        return std::nullopt;
    });
}

PairingState PairingState::from_pairs(std::string name,
                                      std::vector<std::pair<Site, Site>> pairs) {
    auto table = std::make_shared<std::map<Site, Site>>();
    for (const auto& [a, b] : pairs) {
        if (a == b) throw std::invalid_argument("PairingState: site paired with itself");
        if (!table->emplace(a, b).second || !table->emplace(b, a).second) {
            throw std::invalid_argument("PairingState: pairs are not disjoint");
        }
    }
    return PairingState(std::move(name), [table](const Site& s) -> std::optional<Site> {
        const auto it = table->find(s);
        if (it == table->end()) return std::nullopt;
        return it->second;
    });
}

std::optional<Site> PairingState::partner(const Site& s) const {
    const std::optional<Site> p = partner_(s);
    if (p) {
        if (*p == s) throw std::logic_error("PairingState: site paired with itself");
        const std::optional<Site> back = partner_(*p);
        if (!back || *back != s) {
            throw std::logic_error("PairingState: pairing rule is not an involution");
        }
    }
    return p;
}

int PairingState::eval(const PauliString& g) const {
    std::set<Site> done;
    for (const auto& [s, l] : g.letters()) {
        if (done.count(s)) continue;
        const std::optional<Site> p = partner(s);
        if (!p) {
            if (has_x(l)) return 0;  // <0|X^x Z^z|0> vanishes when x = 1
            continue;
        }
        // Matched pair: both letters must agree exactly; the partner being
        // identity counts as a mismatch.
        if (!g.has_site(*p) || g.letter_at(*p) != l) return 0;
        done.insert(s);
        done.insert(*p);
    }
    return 1;
}

std::complex<double> PairingState::eval(const AlgebraElement& e) const {
    std::complex<double> sum = 0.0;
    for (const auto& [g, c] : e.terms()) {
        if (eval(g) == 1) sum += c;
    }
    return sum;
}

}  // namespace selfemb::car
