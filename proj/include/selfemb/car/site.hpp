#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace selfemb::car {

// The four registers of the self-embezzlement circuit. Each party holds two
// registers; the "slot" is the per-party register number (1 or 2).
enum class Reg : std::uint8_t { A1 = 0, A2 = 1, B1 = 2, B2 = 3 };

inline bool is_alice(Reg r) { return r == Reg::A1 || r == Reg::A2; }
inline int slot_of(Reg r) { return (r == Reg::A1 || r == Reg::B1) ? 1 : 2; }

inline Reg reg_of(bool alice, int slot) {
    if (slot != 1 && slot != 2) throw std::invalid_argument("reg_of: slot must be 1 or 2");
    if (alice) return slot == 1 ? Reg::A1 : Reg::A2;
    return slot == 1 ? Reg::B1 : Reg::B2;
}

inline const char* reg_name(Reg r) {
    switch (r) {
        case Reg::A1: return "A1";
        case Reg::A2: return "A2";
        case Reg::B1: return "B1";
        case Reg::B2: return "B2";
    }
    throw std::invalid_argument("reg_name: bad register");
}

Reg reg_from_name(const std::string& name);

// One qubit site of the two-way infinite chain of a register.
struct Site {
    Reg reg;
    std::int64_t index;

    auto operator<=>(const Site&) const = default;
};

inline Site site(Reg r, std::int64_t index) { return Site{r, index}; }

// Single-site Pauli letter, encoded as (x, z) exponent bits. The composite
// XZ is kept atomic; Y never appears, which keeps all phases in {+1, -1}.
enum class Letter : std::uint8_t { X = 1, Z = 2, XZ = 3 };

inline bool has_x(Letter l) { return static_cast<std::uint8_t>(l) & 1u; }
inline bool has_z(Letter l) { return static_cast<std::uint8_t>(l) & 2u; }

inline Letter letter_from_bits(bool x, bool z) {
    const auto v = static_cast<std::uint8_t>((x ? 1u : 0u) | (z ? 2u : 0u));
    if (v == 0) throw std::invalid_argument("letter_from_bits: (0,0) is the identity letter");
    return static_cast<Letter>(v);
}

inline const char* letter_name(Letter l) {
    switch (l) {
        case Letter::X: return "X";
        case Letter::Z: return "Z";
        case Letter::XZ: return "XZ";
    }
    throw std::invalid_argument("letter_name: bad letter");
}

Letter letter_from_name(const std::string& name);

}  // namespace selfemb::car
