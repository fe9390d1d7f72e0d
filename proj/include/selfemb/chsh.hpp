#pragma once

#include <Eigen/Dense>

#include "selfemb/car/pauli.hpp"
#include "selfemb/car/states.hpp"
#include "selfemb/qstate.hpp"

namespace selfemb::chsh {

inline constexpr double kClassicalBound = 2.0;
inline constexpr double kTsirelson = 2.8284271247461903;  // 2*sqrt(2)
inline constexpr double kObservableTol = 1e-9;

struct Bipartition {
    Eigen::Index dim_a;
    Eigen::Index dim_b;
};

// Hermitian observables with spectrum in [-1, 1].
struct MatrixSettings {
    Eigen::MatrixXcd a0, a1, b0, b1;
};

// Throws std::invalid_argument unless m is self-adjoint with eigenvalues
// within 1e-9 of [-1, 1].
void validate_observable(const Eigen::MatrixXcd& m);

// <A0 B0> + <A0 B1> + <A1 B0> - <A1 B1> on a pure state over the bipartition
// (Alice acts on the first factor).
double chsh_value_matrix(const Eigen::VectorXcd& state, const MatrixSettings& settings,
                         const Bipartition& cut);

// Self-adjoint algebra elements of norm <= 1; Alice's elements may only
// touch Alice sites and Bob's only Bob sites.
struct AbstractSettings {
    car::AlgebraElement a0, a1, b0, b1;
};

void validate_abstract_settings(const AbstractSettings& settings);

// The CHSH combination evaluated through the abstract state's linearity.
double chsh_value_abstract(const car::PairingState& s, const AbstractSettings& settings);

// CHSH value / classical bound 2, so the maximal quantum value maps to sqrt(2).
double violation_factor(double chsh_value);

struct Admissibility {
    bool admissible;
    double lambda1;
    double threshold;  // sqrt(2/3)
    double epsilon0;   // recorded for provenance only
};

// Gate used by the no-go analysis: lambda_1 <= sqrt(2/3) (+1e-12 slack).
Admissibility catalyst_admissible(const qstate::SchmidtVector& lambda, double epsilon0 = 0.02);

// Z / X for Alice, (Z+X)/sqrt(2) and (Z-X)/sqrt(2) for Bob.
MatrixSettings standard_matrix_settings();
AbstractSettings standard_abstract_settings(car::Site alice_site, car::Site bob_site);

// Planar observable cos(theta) Z + sin(theta) X as a 2x2 matrix.
Eigen::MatrixXcd planar_observable(double theta);

// Largest CHSH value over the angle grid (steps^4 combinations of planar
// observables) on the two-qubit EPR state, computed through the matrix path.
double max_planar_grid_value(int steps);

}  // namespace selfemb::chsh
