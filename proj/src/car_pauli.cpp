#include "selfemb/car/pauli.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace selfemb::car {

Reg reg_from_name(const std::string& name) {
    if (name == "A1") return Reg::A1;
    if (name == "A2") return Reg::A2;
    if (name == "B1") return Reg::B1;
    if (name == "B2") return Reg::B2;
    throw std::invalid_argument("unknown register '" + name + "'");
}

Letter letter_from_name(const std::string& name) {
    if (name == "X") return Letter::X;
    if (name == "Z") return Letter::Z;
    if (name == "XZ") return Letter::XZ;
    throw std::invalid_argument("unknown letter '" + name + "'");
}

PauliString PauliString::single(Site s, Letter l) {
    PauliString g;
    g.letters_.emplace_back(s, l);
    return g;
}

PauliString PauliString::from_letters(std::vector<std::pair<Site, Letter>> letters) {
    std::sort(letters.begin(), letters.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i].first == letters[i + 1].first) {
            throw std::invalid_argument("PauliString: duplicate site");
        }
    }
    PauliString g;
    g.letters_ = std::move(letters);
    return g;
}

Letter PauliString::letter_at(Site s) const {
    const auto it = std::lower_bound(
        letters_.begin(), letters_.end(), s,
        [](const auto& entry, const Site& key) { return entry.first < key; });
    if (it == letters_.end() || it->first != s) {
        throw std::out_of_range("PauliString::letter_at: identity site");
    }
    return it->second;
}

bool PauliString::has_site(Site s) const {
    const auto it = std::lower_bound(
        letters_.begin(), letters_.end(), s,
        [](const auto& entry, const Site& key) { return entry.first < key; });
    return it != letters_.end() && it->first == s;
}

SignedPauli pauli_mul(const PauliString& g, const PauliString& h) {
    std::vector<std::pair<Site, Letter>> out;
    out.reserve(g.weight() + h.weight());
    int sign = 1;
    auto gi = g.letters().begin();
    auto hi = h.letters().begin();
    const auto ge = g.letters().end();
    const auto he = h.letters().end();
    while (gi != ge || hi != he) {
        if (hi == he || (gi != ge && gi->first < hi->first)) {
            out.push_back(*gi++);
        } else if (gi == ge || hi->first < gi->first) {
            out.push_back(*hi++);
        } else {
            // Common site: Z-part of g commutes past X-part of h.
            if (has_z(gi->second) && has_x(hi->second)) sign = -sign;
            const bool x = has_x(gi->second) ^ has_x(hi->second);
            const bool z = has_z(gi->second) ^ has_z(hi->second);
            if (x || z) out.emplace_back(gi->first, letter_from_bits(x, z));
            ++gi;
            ++hi;
        }
    }
    SignedPauli result{sign, {}};
    result.string = PauliString::from_letters(std::move(out));
    return result;
}

SignedPauli adjoint(const PauliString& g) {
    int sign = 1;
    for (const auto& [s, l] : g.letters()) {
        if (l == Letter::XZ) sign = -sign;
    }
    return SignedPauli{sign, g};
}

AlgebraElement AlgebraElement::identity() {
    AlgebraElement e;
    e.terms_.emplace(PauliString{}, 1.0);
    return e;
}

AlgebraElement AlgebraElement::generator(PauliString g, std::complex<double> coeff) {
    AlgebraElement e;
    e.add_term(g, coeff);
    return e;
}

AlgebraElement& AlgebraElement::add_term(const PauliString& g, std::complex<double> coeff) {
    if (coeff == 0.0) return *this;
    auto [it, inserted] = terms_.emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    }
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    for (const auto& [g, c] : other.terms_) out.add_term(g, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    for (const auto& [g, c] : other.terms_) out.add_term(g, -c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
    AlgebraElement out;
    for (const auto& [g, cg] : terms_) {
        for (const auto& [h, ch] : other.terms_) {
            const SignedPauli p = pauli_mul(g, h);
            out.add_term(p.string, cg * ch * static_cast<double>(p.sign));
        }
    }
    return out;
}

AlgebraElement AlgebraElement::operator*(std::complex<double> scalar) const {
    AlgebraElement out;
    if (scalar == 0.0) return out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * scalar);
    return out;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement out;
    for (const auto& [g, c] : terms_) {
        const SignedPauli a = car::adjoint(g);
        out.add_term(a.string, std::conj(c) * static_cast<double>(a.sign));
    }
    return out;
}

std::vector<Site> AlgebraElement::support() const {
    std::set<Site> sites;
    for (const auto& [g, c] : terms_) {
        for (const auto& [s, l] : g.letters()) sites.insert(s);
    }
    return {sites.begin(), sites.end()};
}

}  // namespace selfemb::car
