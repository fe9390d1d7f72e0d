#include "selfemb/chsh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "selfemb/car/matrix.hpp"
#include "selfemb/errors.hpp"

namespace selfemb::chsh {

using car::AlgebraElement;
using car::PairingState;
using car::Site;

namespace {

// <psi|(A (x) B)|psi> via the reshaped state Psi: tr(Psi^dag A Psi B^T).
std::complex<double> pair_expectation(const Eigen::MatrixXcd& psi_mat, const Eigen::MatrixXcd& a,
                                      const Eigen::MatrixXcd& b) {
    return (psi_mat.adjoint() * a * psi_mat * b.transpose()).trace();
}

void check_party_support(const AlgebraElement& e, bool alice, const char* label) {
    for (const Site& s : e.support()) {
        if (car::is_alice(s.reg) != alice) {
            throw locality_error(std::string("chsh: ") + label +
                                 " touches the other party's sites");
        }
    }
}

void check_abstract_observable(const AlgebraElement& e, const char* label) {
    const AlgebraElement diff = e - e.adjoint();
    for (const auto& [g, c] : diff.terms()) {
        if (std::abs(c) > 1e-12) {
            throw std::invalid_argument(std::string("chsh: ") + label + " is not self-adjoint");
        }
    }
    if (car::operator_norm(e) > 1.0 + kObservableTol) {
        throw std::invalid_argument(std::string("chsh: ") + label + " has norm > 1");
    }
}

}  // namespace

void validate_observable(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("chsh: observable must be square");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kObservableTol) {
        throw std::invalid_argument("chsh: observable is not self-adjoint");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1.0 - kObservableTol ||
        solver.eigenvalues().maxCoeff() > 1.0 + kObservableTol) {
        throw std::invalid_argument("chsh: observable spectrum outside [-1, 1]");
    }
}

double chsh_value_matrix(const Eigen::VectorXcd& state, const MatrixSettings& settings,
                         const Bipartition& cut) {
    if (cut.dim_a * cut.dim_b != state.size()) {
        throw std::invalid_argument("chsh: state dimension does not match bipartition");
    }
    if (settings.a0.rows() != cut.dim_a || settings.a1.rows() != cut.dim_a ||
        settings.b0.rows() != cut.dim_b || settings.b1.rows() != cut.dim_b) {
        throw std::invalid_argument("chsh: observable dimension does not match bipartition");
    }
    validate_observable(settings.a0);
    validate_observable(settings.a1);
    validate_observable(settings.b0);
    validate_observable(settings.b1);

    // Row-major reshape: state index = a * dim_b + b.
    const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                         Eigen::RowMajor>>
        psi_row(state.data(), cut.dim_a, cut.dim_b);
    const Eigen::MatrixXcd psi_mat = psi_row;

    const std::complex<double> value =
        pair_expectation(psi_mat, settings.a0, settings.b0) +
        pair_expectation(psi_mat, settings.a0, settings.b1) +
        pair_expectation(psi_mat, settings.a1, settings.b0) -
        pair_expectation(psi_mat, settings.a1, settings.b1);
    return value.real();
}

void validate_abstract_settings(const AbstractSettings& settings) {
    check_party_support(settings.a0, true, "A0");
    check_party_support(settings.a1, true, "A1");
    check_party_support(settings.b0, false, "B0");
    check_party_support(settings.b1, false, "B1");
    check_abstract_observable(settings.a0, "A0");
    check_abstract_observable(settings.a1, "A1");
    check_abstract_observable(settings.b0, "B0");
    check_abstract_observable(settings.b1, "B1");
}

double chsh_value_abstract(const PairingState& s, const AbstractSettings& settings) {
    validate_abstract_settings(settings);
    const AlgebraElement combination = settings.a0 * settings.b0 + settings.a0 * settings.b1 +
                                       settings.a1 * settings.b0 - settings.a1 * settings.b1;
    const std::complex<double> value = s.eval(combination);
    if (std::abs(value.imag()) > 1e-12) {
        throw std::logic_error("chsh: abstract CHSH value has a nonreal part");
    }
    return value.real();
}

double violation_factor(double chsh_value) { return chsh_value / kClassicalBound; }

Admissibility catalyst_admissible(const qstate::SchmidtVector& lambda, double epsilon0) {
    const double threshold = std::sqrt(2.0 / 3.0);
    const double lambda1 = lambda.lambda1();
    return Admissibility{lambda1 <= threshold + 1e-12, lambda1, threshold, epsilon0};
}

MatrixSettings standard_matrix_settings() {
    Eigen::MatrixXcd x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return MatrixSettings{z, x, (z + x) * inv_sqrt2, (z - x) * inv_sqrt2};
}

AbstractSettings standard_abstract_settings(Site alice_site, Site bob_site) {
    using car::Letter;
    using car::PauliString;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const AlgebraElement za = AlgebraElement::generator(PauliString::single(alice_site, Letter::Z));
    const AlgebraElement xa = AlgebraElement::generator(PauliString::single(alice_site, Letter::X));
    const AlgebraElement zb = AlgebraElement::generator(PauliString::single(bob_site, Letter::Z));
    const AlgebraElement xb = AlgebraElement::generator(PauliString::single(bob_site, Letter::X));
    return AbstractSettings{za, xa, (zb + xb) * inv_sqrt2, (zb - xb) * inv_sqrt2};
}

Eigen::MatrixXcd planar_observable(double theta) {
    Eigen::MatrixXcd m(2, 2);
    m << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
    return m;
}

double max_planar_grid_value(int steps) {
    if (steps < 2) throw std::invalid_argument("max_planar_grid_value: steps must be >= 2");
    Eigen::VectorXcd epr(4);
    epr << 1.0 / std::numbers::sqrt2, 0, 0, 1.0 / std::numbers::sqrt2;
    const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                         Eigen::RowMajor>>
        psi_row(epr.data(), 2, 2);
    const Eigen::MatrixXcd psi_mat = psi_row;

    // Correlator table from the matrix path, then the grid maximum over all
    // setting combinations.
    std::vector<Eigen::MatrixXcd> obs;
    obs.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        obs.push_back(planar_observable(2.0 * std::numbers::pi * i / steps));
    }
    Eigen::MatrixXd corr(steps, steps);
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            corr(i, j) = pair_expectation(psi_mat, obs[static_cast<std::size_t>(i)],
                                          obs[static_cast<std::size_t>(j)])
                             .real();
        }
    }
    double best = -4.0;
    for (int a0 = 0; a0 < steps; ++a0) {
        for (int a1 = 0; a1 < steps; ++a1) {
            for (int b0 = 0; b0 < steps; ++b0) {
                for (int b1 = 0; b1 < steps; ++b1) {
                    best = std::max(best,
                                    corr(a0, b0) + corr(a0, b1) + corr(a1, b0) - corr(a1, b1));
                }
            }
        }
    }
    return best;
}

}  // namespace selfemb::chsh
