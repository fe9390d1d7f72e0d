#include "selfemb/car/automorphism.hpp"

#include <stdexcept>

namespace selfemb::car {

namespace {

void check_slot(SlotIndex x) {
    if (x.slot != 1 && x.slot != 2) {
        throw std::invalid_argument("SitePermutation: slot must be 1 or 2");
    }
}

}  // namespace

SitePermutation::SitePermutation(std::string name, Rule forward, Rule inverse)
    : name_(std::move(name)), forward_(std::move(forward)), inverse_(std::move(inverse)) {}

SlotIndex SitePermutation::forward(SlotIndex x) const {
    check_slot(x);
    const SlotIndex y = forward_(x);
    check_slot(y);
    if (inverse_(y) != x) {
        throw std::logic_error("SitePermutation '" + name_ + "': inverse(forward(x)) != x");
    }
    return y;
}

SlotIndex SitePermutation::inverse(SlotIndex y) const {
    check_slot(y);
    const SlotIndex x = inverse_(y);
    check_slot(x);
    if (forward_(x) != y) {
        throw std::logic_error("SitePermutation '" + name_ + "': forward(inverse(y)) != y");
    }
    return x;
}

Site SitePermutation::map_site(const Site& s) const {
    const SlotIndex mapped = forward(SlotIndex{slot_of(s.reg), s.index});
    return site(reg_of(is_alice(s.reg), mapped.slot), mapped.index);
}

SitePermutation SitePermutation::identity() {
    return SitePermutation(
        "identity", [](SlotIndex x) { return x; }, [](SlotIndex x) { return x; });
}

SitePermutation SitePermutation::canonical_sigma() {
    // Doubling must not wrap around.
    constexpr std::int64_t kIndexLimit = std::int64_t{1} << 61;
    auto check_range = [kIndexLimit](std::int64_t j) {
        if (j > kIndexLimit || j < -kIndexLimit) {
            throw std::invalid_argument("canonical_sigma: site index out of range");
        }
    };
    auto zig = [](std::int64_t j) -> std::int64_t {
        if (j == 0) return 0;
        return (j % 2 == 1) ? -(j + 1) / 2 : j / 2;
    };
    auto zag = [](std::int64_t v) -> std::int64_t {  // inverse of zig
        if (v == 0) return 0;
        return (v < 0) ? -2 * v - 1 : 2 * v;
    };
    auto fwd = [zig, check_range](SlotIndex x) -> SlotIndex {
        check_range(x.index);
        if (x.index < 0) {
            // Interleave: slot-1 negatives to odd negatives, slot-2 to even.
            return SlotIndex{1, x.slot == 1 ? 2 * x.index + 1 : 2 * x.index};
        }
        if (x.slot == 1) return x;
        return SlotIndex{2, zig(x.index)};
    };
    auto inv = [zag, check_range](SlotIndex y) -> SlotIndex {
        check_range(y.index);
        if (y.slot == 1) {
            if (y.index >= 0) return y;
            if (y.index % 2 != 0) return SlotIndex{1, (y.index - 1) / 2};
            return SlotIndex{2, y.index / 2};
        }
        return SlotIndex{2, zag(y.index)};
    };
    return SitePermutation("canonical-sigma", fwd, inv);
}

PauliString apply_automorphism(const SitePermutation& sigma, const PauliString& g) {
    std::vector<std::pair<Site, Letter>> out;
    out.reserve(g.weight());
    for (const auto& [s, l] : g.letters()) {
        out.emplace_back(sigma.map_site(s), l);
    }
    return PauliString::from_letters(std::move(out));
}

AlgebraElement apply_automorphism(const SitePermutation& sigma, const AlgebraElement& e) {
    AlgebraElement out;
    for (const auto& [g, c] : e.terms()) {
        out.add_term(apply_automorphism(sigma, g), c);
    }
    return out;
}

}  // namespace selfemb::car
