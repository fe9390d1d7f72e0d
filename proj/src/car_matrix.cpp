#include "selfemb/car/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfemb/errors.hpp"

namespace selfemb::car {

namespace {

// (x mask, z mask) of a generator over the window bit positions;
// window[0] is the highest bit.
struct Masks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
};

Masks masks_for(const PauliString& g, std::span<const Site> window) {
    std::map<Site, std::size_t> pos;
    for (std::size_t t = 0; t < window.size(); ++t) pos.emplace(window[t], t);
    if (pos.size() != window.size()) {
        throw std::invalid_argument("to_matrix: window has duplicate sites");
    }
    Masks m;
    const std::size_t n = window.size();
    for (const auto& [s, l] : g.letters()) {
        const auto it = pos.find(s);
        if (it == pos.end()) {
            throw support_error("to_matrix: generator touches a site outside the window");
        }
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - it->second);
        if (has_x(l)) m.x |= bit;
        if (has_z(l)) m.z |= bit;
    }
    return m;
}

void check_window(std::span<const Site> window, std::size_t cap, const char* what) {
    if (window.size() > cap) {
        throw size_error(std::string(what) + ": window size " + std::to_string(window.size()) +
                         " exceeds cap " + std::to_string(cap));
    }
}

// Adds coeff * M(g) into acc. Each column c has the single row c ^ xmask,
// with sign (-1)^popcount(zmask & c): X^x Z^z |c> = (-1)^(z.c) |c xor x>.
void accumulate_generator(Eigen::MatrixXcd& acc, const Masks& m, std::complex<double> coeff) {
    const auto dim = static_cast<std::uint64_t>(acc.cols());
    for (std::uint64_t c = 0; c < dim; ++c) {
        const std::uint64_t r = c ^ m.x;
        const double sign = (std::popcount(m.z & c) % 2 == 0) ? 1.0 : -1.0;
        acc(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += sign * coeff;
    }
}

}  // namespace

Eigen::MatrixXcd to_matrix(const PauliString& g, std::span<const Site> window) {
    check_window(window, kMatrixWindowCap, "to_matrix");
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << window.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    accumulate_generator(out, masks_for(g, window), 1.0);
    return out;
}

Eigen::MatrixXcd to_matrix(const AlgebraElement& e, std::span<const Site> window) {
    check_window(window, kMatrixWindowCap, "to_matrix");
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << window.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [g, c] : e.terms()) {
        accumulate_generator(out, masks_for(g, window), c);
    }
    return out;
}

double operator_norm(const AlgebraElement& e) {
    if (e.is_zero()) return 0.0;
    const std::vector<Site> window = e.support();
    check_window(window, kMatrixWindowCap, "operator_norm");
    const Eigen::MatrixXcd m = to_matrix(e, window);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.adjoint() * m,
                                                           Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

Eigen::MatrixXcd restrict_density(const PairingState& s, std::span<const Site> window) {
    check_window(window, kDensityWindowCap, "restrict_density");
    const std::size_t n = window.size();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);

    // Letters per site encoded base-4: 0 = I, else the Letter bits.
    const std::uint64_t combos = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < combos; ++code) {
        std::vector<std::pair<Site, Letter>> letters;
        int adj_sign = 1;
        for (std::size_t t = 0; t < n; ++t) {
            const auto bits = static_cast<std::uint8_t>((code >> (2 * t)) & 3u);
            if (bits == 0) continue;
            const auto l = static_cast<Letter>(bits);
            if (l == Letter::XZ) adj_sign = -adj_sign;
            letters.emplace_back(window[t], l);
        }
        const PauliString p = PauliString::from_letters(std::move(letters));
        // s(P*) = adj_sign * s(P); expectations are exact {0,1} integers.
        if (s.eval(p) == 0) continue;
        accumulate_generator(rho, masks_for(p, window), static_cast<double>(adj_sign));
    }
    rho /= static_cast<double>(dim);

    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::logic_error("restrict_density: reconstruction is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
        throw std::logic_error("restrict_density: reconstruction does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw std::logic_error("restrict_density: reconstruction is not PSD");
    }
    return rho;
}

Purity purity_check(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("purity_check: matrix must be square");
    }
    // For Hermitian rho, trace(rho^2) = sum |rho_ij|^2.
    const double purity = rho.cwiseAbs2().sum();
    return Purity{purity, purity >= 1.0 - 1e-9};
}

}  // namespace selfemb::car
