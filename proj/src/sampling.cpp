#include "selfemb/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace selfemb::sampling {

double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal_double(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform_double(rng);  // (0, 1]
    const double u2 = uniform_double(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: empty range");
    return static_cast<std::size_t>(rng() % n);
}

qstate::ProbDist random_sorted_dist(std::mt19937_64& rng, std::size_t support) {
    std::vector<double> w(support);
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - uniform_double(rng));
        sum += x;
    }
    for (double& x : w) x /= sum;
    std::sort(w.begin(), w.end(), std::greater<double>());
    return qstate::ProbDist(std::move(w), qstate::kDerivedNormTol);
}

qstate::SchmidtVector random_schmidt(std::mt19937_64& rng, std::size_t support) {
    return qstate::schmidt_from_probs(random_sorted_dist(rng, support));
}

qstate::SchmidtVector random_admissible_catalyst(std::mt19937_64& rng, std::size_t max_support) {
    if (max_support < 2) {
        throw std::invalid_argument("random_admissible_catalyst: max_support must be >= 2");
    }
    const double threshold = std::sqrt(2.0 / 3.0);
    for (;;) {
        const std::size_t n = 2 + uniform_index(rng, max_support - 1);
        qstate::SchmidtVector lambda = random_schmidt(rng, n);
        if (lambda.lambda1() <= threshold) return lambda;
    }
}

Eigen::VectorXcd random_unit_vector(std::mt19937_64& rng, Eigen::Index dim) {
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = normal_double(rng);
        const double im = normal_double(rng);
        v[i] = std::complex<double>(re, im);
    }
    v.normalize();
    return v;
}

PropositionInstance make_proposition_instance(std::mt19937_64& rng) {
    for (;;) {
        const Eigen::Index env_dim = 2 + static_cast<Eigen::Index>(uniform_index(rng, 5));
        const Eigen::Index sys_dim = 2 + static_cast<Eigen::Index>(uniform_index(rng, 5));
        const Eigen::VectorXcd psi = random_unit_vector(rng, sys_dim);
        const Eigen::VectorXcd chi = random_unit_vector(rng, env_dim);
        const double eps_target = 0.001 + 0.097 * uniform_double(rng);

        const Eigen::MatrixXcd base = chi * psi.transpose();
        Eigen::MatrixXcd noise(env_dim, sys_dim);
        for (Eigen::Index a = 0; a < env_dim; ++a) {
            for (Eigen::Index b = 0; b < sys_dim; ++b) {
                noise(a, b) = std::complex<double>(normal_double(rng), normal_double(rng));
            }
        }
        const std::complex<double> inner = base.conjugate().cwiseProduct(noise).sum();
        noise -= inner * base;
        const double nn = noise.norm();
        if (nn < 1e-12) continue;
        noise /= nn;

        const double t = 0.5 * eps_target;
        Eigen::MatrixXcd phi = std::sqrt(1.0 - t) * base + std::sqrt(t) * noise;
        phi /= phi.norm();

        const Eigen::MatrixXcd reduced = phi.transpose() * phi.conjugate();
        const double fid = (psi.adjoint() * reduced * psi)(0).real();
        const double eps = 1.0 - fid;
        if (eps > 1e-6 && eps < 0.0999) {
            return PropositionInstance{phi, psi, eps};
        }
    }
}

}  // namespace selfemb::sampling
