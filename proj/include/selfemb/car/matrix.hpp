#pragma once

#include <Eigen/Dense>
#include <span>

#include "selfemb/car/pauli.hpp"
#include "selfemb/car/states.hpp"

namespace selfemb::car {

inline constexpr std::size_t kMatrixWindowCap = 12;
inline constexpr std::size_t kDensityWindowCap = 6;

// Tensor-product embedding over an ordered window of sites; window[0] is the
// leftmost (most significant) factor. Every term's support must lie inside
// the window. Entries of a single generator are exactly 0 or +-1.
Eigen::MatrixXcd to_matrix(const PauliString& g, std::span<const Site> window);
Eigen::MatrixXcd to_matrix(const AlgebraElement& e, std::span<const Site> window);

// Spectral norm of the matrix embedding over the union-of-support window.
double operator_norm(const AlgebraElement& e);

// Reconstructs the reduced density matrix on the window from the 4^m Pauli
// expectations: rho = 2^-m * sum_P s(P*) P. The result is validated to be
// Hermitian, unit trace and PSD within 1e-10.
Eigen::MatrixXcd restrict_density(const PairingState& s, std::span<const Site> window);

struct Purity {
    double purity;  // trace(rho^2)
    bool is_pure;   // purity >= 1 - 1e-9
};

Purity purity_check(const Eigen::MatrixXcd& rho);

}  // namespace selfemb::car
