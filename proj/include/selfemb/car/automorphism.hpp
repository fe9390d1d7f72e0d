#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "selfemb/car/pauli.hpp"

namespace selfemb::car {

// Position of a site within one party: per-party register slot and chain index.
struct SlotIndex {
    int slot;  // 1 or 2
    std::int64_t index;

    auto operator<=>(const SlotIndex&) const = default;
};

// Finitely-described bijection of one party's sites. forward/inverse are
// piecewise affine rules; the inverse relation is checked on every query.
class SitePermutation {
public:
    using Rule = std::function<SlotIndex(SlotIndex)>;

    SitePermutation(std::string name, Rule forward, Rule inverse);

    const std::string& name() const { return name_; }

    SlotIndex forward(SlotIndex x) const;
    SlotIndex inverse(SlotIndex y) const;

    // Same party, (slot, index) permuted.
    Site map_site(const Site& s) const;

    static SitePermutation identity();

    // The concrete witness used by the exact checker. It folds both slots'
    // negative half-chains into slot 1's negative half-chain:
    //   (-k, 1) -> (-(2k-1), 1)   k >= 1
    //   (-k, 2) -> (-2k, 1)       k >= 1
    //   ( j, 1) -> ( j, 1)        j >= 0
    //   ( j, 2) -> (zig(j), 2)    j >= 0, zig walking 0, -1, 1, -2, 2, ...
    static SitePermutation canonical_sigma();

private:
    std::string name_;
    Rule forward_;
    Rule inverse_;
};

// Relabels every site s of g to sigma(s); letters and weight are unchanged.
PauliString apply_automorphism(const SitePermutation& sigma, const PauliString& g);
AlgebraElement apply_automorphism(const SitePermutation& sigma, const AlgebraElement& e);

}  // namespace selfemb::car
