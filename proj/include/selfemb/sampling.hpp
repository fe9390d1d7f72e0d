#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "selfemb/qstate.hpp"

namespace selfemb::sampling {

// Raw-engine draws only, so sequences are identical across standard
// libraries for a given seed.
double uniform_double(std::mt19937_64& rng);                       // [0, 1)
double normal_double(std::mt19937_64& rng);                        // Box-Muller
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);    // [0, n)

// Exponential weights, normalized and sorted nonincreasing.
qstate::ProbDist random_sorted_dist(std::mt19937_64& rng, std::size_t support);

// Random Schmidt vector with the given support.
qstate::SchmidtVector random_schmidt(std::mt19937_64& rng, std::size_t support);

// Redraws until lambda_1 <= sqrt(2/3); support uniform in [2, max_support].
qstate::SchmidtVector random_admissible_catalyst(std::mt19937_64& rng, std::size_t max_support);

Eigen::VectorXcd random_unit_vector(std::mt19937_64& rng, Eigen::Index dim);

// Purification with reduced fidelity 1 - eps on a random target vector.
struct PropositionInstance {
    Eigen::MatrixXcd phi;   // unit Frobenius norm, rows index the environment
    Eigen::VectorXcd psi;   // unit vector on the traced-in factor
    double eps;             // 1 - <psi| Tr_env(phi phi*) |psi>, in (0, 0.1)
};

PropositionInstance make_proposition_instance(std::mt19937_64& rng);

}  // namespace selfemb::sampling
