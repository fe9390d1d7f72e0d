#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfemb/car/pauli.hpp"

namespace selfemb::car {

// Abstract state functional determined by an EPR-pair matching over sites.
// Every unmatched site is in |0>. On a generator the state evaluates to a
// {0,1} product of sitewise factors:
//   unmatched site:  1 if the letter has no X part, else 0
//   matched pair:    1 if both sites carry the same letter, else 0
// (a pair with a letter on only one side counts as mismatched).
class PairingState {
public:
    using PartnerFn = std::function<std::optional<Site>(const Site&)>;

    PairingState(std::string name, PartnerFn partner);

    // Every site in |0>: the product state phi (x) phi (x) ... over all registers.
    static PairingState vacuum();
    // EPR pairs (-k,A1)<->(-k,B1) for k >= 1, everything else |0>. This is the
    // catalyst psi on (A1,B1) next to vacuum second registers, i.e. the
    // initial state psi (x) (phi (x) phi).
    static PairingState initial();
    // Initial pairs plus (-k,A2)<->(-k,B2) for k >= 1: the target psi (x) psi.
    static PairingState target();
    // Explicit finite pairing; pairs must be disjoint.
    static PairingState from_pairs(std::string name, std::vector<std::pair<Site, Site>> pairs);

    const std::string& name() const { return name_; }

    // Checks the involution on every query.
    std::optional<Site> partner(const Site& s) const;

    int eval(const PauliString& g) const;
    std::complex<double> eval(const AlgebraElement& e) const;

private:
    std::string name_;
    PartnerFn partner_;
};

inline int eval_state(const PairingState& s, const PauliString& g) { return s.eval(g); }
inline std::complex<double> eval_element(const PairingState& s, const AlgebraElement& e) {
    return s.eval(e);
}

}  // namespace selfemb::car
