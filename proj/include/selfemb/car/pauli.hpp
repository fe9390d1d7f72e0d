#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "selfemb/car/site.hpp"

namespace selfemb::car {

// Finite-weight generator X^a Z^b: a finite map from sites to non-identity
// letters, kept sorted by site. The empty string is the identity.
class PauliString {
public:
    PauliString() = default;

    static PauliString single(Site s, Letter l);
    // Sorts the letters by site; duplicate sites are rejected.
    static PauliString from_letters(std::vector<std::pair<Site, Letter>> letters);

    std::size_t weight() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    std::span<const std::pair<Site, Letter>> letters() const { return letters_; }
    Letter letter_at(Site s) const;   // identity sites throw; use has_site first
    bool has_site(Site s) const;

    auto operator<=>(const PauliString&) const = default;

private:
    std::vector<std::pair<Site, Letter>> letters_;
};

// Product or adjoint of generators: a {+1,-1} sign times a generator.
struct SignedPauli {
    int sign;  // +1 or -1
    PauliString string;
};

// Sitewise X^a Z^b * X^a' Z^b' = (-1)^(b . a') X^(a xor a') Z^(b xor b').
SignedPauli pauli_mul(const PauliString& g, const PauliString& h);

// (X^a Z^b)* = (-1)^(a . b) X^a Z^b.
SignedPauli adjoint(const PauliString& g);

// Finite linear combination of generators with complex coefficients.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement identity();
    static AlgebraElement generator(PauliString g, std::complex<double> coeff = 1.0);

    const std::map<PauliString, std::complex<double>>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement& add_term(const PauliString& g, std::complex<double> coeff);

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator*(const AlgebraElement& other) const;
    AlgebraElement operator*(std::complex<double> scalar) const;

    AlgebraElement adjoint() const;

    // All sites touched by any term, sorted.
    std::vector<Site> support() const;

private:
    std::map<PauliString, std::complex<double>> terms_;
};

inline AlgebraElement operator*(std::complex<double> scalar, const AlgebraElement& e) {
    return e * scalar;
}

}  // namespace selfemb::car
