#include "selfemb/embezzle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "selfemb/errors.hpp"

namespace selfemb::embezzle {

using qstate::ProbDist;
using qstate::SchmidtVector;

namespace {

std::vector<double> sorted_pair_products(const std::vector<double>& p) {
    std::vector<double> prod;
    prod.reserve(p.size() * p.size());
    for (double a : p) {
        for (double b : p) prod.push_back(a * b);
    }
    std::stable_sort(prod.begin(), prod.end(), std::greater<double>());
    return prod;
}

// Streams the pairwise products cat(i)*target[k] in nonincreasing order and
// dots them against cat(0..n-1); entries past position n meet zero padding,
// so n pops suffice.
double aligned_fidelity_streamed(const std::function<double(std::size_t)>& cat, std::size_t n,
                                 const SchmidtVector& target) {
    const std::size_t m = target.size();
    using Entry = std::tuple<double, std::size_t, std::size_t>;  // value, target idx, catalyst idx
    std::priority_queue<Entry> heap;
    for (std::size_t k = 0; k < m; ++k) {
        heap.emplace(cat(0) * target[k], k, 0);
    }
    double f = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto [value, k, i] = heap.top();
        heap.pop();
        f += cat(j) * value;
        if (i + 1 < n) {
            heap.emplace(cat(i + 1) * target[k], k, i + 1);
        }
    }
    return std::clamp(f, 0.0, 1.0);
}

void partitions_rec(unsigned remaining, unsigned max_part, std::size_t max_parts,
                    std::vector<unsigned>& parts,
                    const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (remaining == 0) {
        emit(parts);
        return;
    }
    if (parts.size() == max_parts) return;
    for (unsigned next = std::min(remaining, max_part); next >= 1; --next) {
        parts.push_back(next);
        partitions_rec(remaining - next, next, max_parts, parts, emit);
        parts.pop_back();
    }
}

}  // namespace

double self_embezzlement_fidelity(const SchmidtVector& lambda, std::size_t cap) {
    const std::size_t n = lambda.size();
    if (n > cap / n) {
        throw size_error("self_embezzlement_fidelity: n^2 exceeds cap for n = " +
                         std::to_string(n));
    }
    return qstate::aligned_fidelity(lambda, qstate::tensor_sorted(lambda, lambda, cap));
}

double min_rearrangement_distance(const ProbDist& p, std::size_t cap) {
    const std::size_t n = p.size();
    if (n > cap / n) {
        throw size_error("min_rearrangement_distance: n^2 exceeds cap for n = " +
                         std::to_string(n));
    }
    const std::vector<double> prod = sorted_pair_products(p.probs());
    double sum = 0.0;
    for (std::size_t k = 0; k < prod.size(); ++k) {
        const double pk = k < n ? p[k] : 0.0;
        sum += std::abs(pk - prod[k]);
    }
    return 0.5 * sum;
}

double brute_force_rearrangement_min(const ProbDist& p) {
    const std::size_t n = p.size();
    if (n > 4) {
        throw size_error("brute_force_rearrangement_min: oracle limited to |p| <= 4");
    }
    std::vector<double> masses;
    for (double x : p.probs()) {
        if (x > 0.0) masses.push_back(x);
    }
    const std::vector<double> target = sorted_pair_products(p.probs());
    const std::size_t slots = n * n;
    const double base = [&] {
        double s = 0.0;
        for (double q : target) s += q;
        return s;
    }();

    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> used(slots, false);
    // Depth-first over all injections of the masses into the slots.
    std::function<void(std::size_t, double)> place = [&](std::size_t depth, double l1) {
        if (depth == masses.size()) {
            best = std::min(best, 0.5 * l1);
            return;
        }
        for (std::size_t s = 0; s < slots; ++s) {
            if (used[s]) continue;
            used[s] = true;
            place(depth + 1, l1 - target[s] + std::abs(masses[depth] - target[s]));
            used[s] = false;
        }
    };
    place(0, base);
    return best;
}

std::vector<ProbDist> grid_distributions(unsigned q, std::size_t max_support,
                                         unsigned max_first_num, unsigned max_first_den) {
    if (q == 0) throw std::invalid_argument("grid_distributions: q must be positive");
    constexpr std::size_t kEnumerationCap = 1'000'000;
    std::vector<ProbDist> out;
    std::vector<unsigned> parts;
    // Largest part c must satisfy c/q <= num/den, i.e. c*den <= num*q.
    unsigned max_part = q;
    while (max_part >= 1 &&
           static_cast<unsigned long long>(max_part) * max_first_den >
               static_cast<unsigned long long>(max_first_num) * q) {
        --max_part;
    }
    if (max_part == 0) return out;
    partitions_rec(q, max_part, max_support, parts, [&](const std::vector<unsigned>& c) {
        if (out.size() >= kEnumerationCap) {
            throw size_error("grid_distributions: more than 1e6 grid points; coarsen the grid");
        }
        std::vector<double> probs(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) probs[i] = static_cast<double>(c[i]) / q;
        out.emplace_back(std::move(probs));
    });
    return out;
}

std::vector<LemmaScanRow> lemma_scan(double grid_step, std::size_t max_support) {
    if (!(grid_step > 0.0) || grid_step > 0.5) {
        throw std::invalid_argument("lemma_scan: grid_step must lie in (0, 1/2]");
    }
    if (max_support > 64) {
        throw std::invalid_argument("lemma_scan: max_support must be <= 64");
    }
    const double q_real = 1.0 / grid_step;
    const unsigned q = static_cast<unsigned>(std::llround(q_real));
    if (std::abs(q_real - static_cast<double>(q)) > 1e-9) {
        throw std::invalid_argument("lemma_scan: grid_step must be the reciprocal of an integer");
    }

    std::vector<LemmaScanRow> rows;
    for (ProbDist& p : grid_distributions(q, max_support, 2, 3)) {
        // Integer prefix sums keep m and mu exact on the grid.
        unsigned prefix = 0;
        std::size_t m = 0;
        unsigned mu_num = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto c = static_cast<unsigned>(std::llround(p[i] * q));
            if (3ull * (prefix + c) <= 2ull * q) {
                prefix += c;
                m = i + 1;
                mu_num = prefix;
            } else {
                break;
            }
        }
        const double distance = min_rearrangement_distance(p);
        const bool counterexample = distance < kDistanceBound - kBoundSlack;
        rows.push_back(LemmaScanRow{std::move(p), distance, static_cast<double>(mu_num) / q, m,
                                    counterexample});
    }
    return rows;
}

double channel_selfembezzlement_fidelity(const SchmidtVector& lambda, const SchmidtVector& gamma,
                                         std::size_t cap) {
    const std::size_t n = lambda.size(), g = gamma.size();
    if (n > cap || n * n > cap / g) {
        throw size_error("channel_selfembezzlement_fidelity: n^2*g exceeds cap");
    }
    std::vector<double> prod;
    prod.reserve(n * n * g);
    for (double a : lambda.coeffs()) {
        for (double b : lambda.coeffs()) {
            for (double c : gamma.coeffs()) prod.push_back(a * b * c);
        }
    }
    std::stable_sort(prod.begin(), prod.end(), std::greater<double>());
    double f = 0.0;
    for (std::size_t k = 0; k < n; ++k) f += lambda[k] * prod[k];
    return std::clamp(f, 0.0, 1.0);
}

ProductExtension nearest_product_extension(const Eigen::MatrixXcd& phi_matrix,
                                           const Eigen::VectorXcd& psi) {
    if (phi_matrix.cols() != psi.size()) {
        throw std::invalid_argument("nearest_product_extension: dimension mismatch");
    }
    if (std::abs(phi_matrix.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("nearest_product_extension: phi must have unit Frobenius norm");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("nearest_product_extension: psi must be a unit vector");
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(phi_matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const Eigen::MatrixXcd& v = svd.matrixV();

    // phi = sum_i sv[i] |u_i> (x) |conj(v_i)>, so the right Schmidt vectors
    // are the conjugated columns of V.
    std::size_t best = 0;
    double best_ov = -1.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const Eigen::VectorXcd vi = v.col(i).conjugate();
        const double ov = std::norm(psi.dot(vi));
        if (ov > best_ov) {
            best_ov = ov;
            best = static_cast<std::size_t>(i);
        }
    }
    const double p0 = sv[static_cast<Eigen::Index>(best)] * sv[static_cast<Eigen::Index>(best)];
    return ProductExtension{best, p0, p0 * best_ov};
}

VdhCatalyst::VdhCatalyst(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("VdhCatalyst: n must be >= 1");
    double h = 0.0;
    for (std::size_t j = n; j >= 1; --j) h += 1.0 / static_cast<double>(j);
    harmonic_ = h;
}

double VdhCatalyst::coeff(std::size_t j) const {
    if (j >= n_) return 0.0;
    return 1.0 / std::sqrt(static_cast<double>(j + 1) * harmonic_);
}

SchmidtVector VdhCatalyst::materialize() const {
    if (n_ > qstate::kDefaultProductCap) {
        throw size_error("VdhCatalyst::materialize: n exceeds cap");
    }
    std::vector<double> coeffs(n_);
    for (std::size_t j = 0; j < n_; ++j) coeffs[j] = coeff(j);
    return SchmidtVector(std::move(coeffs), qstate::kDerivedNormTol);
}

double embezzlement_fidelity(const SchmidtVector& catalyst, const SchmidtVector& target,
                             std::size_t cap) {
    if (catalyst.size() > cap || target.size() > cap) {
        throw size_error("embezzlement_fidelity: input length exceeds cap");
    }
    return aligned_fidelity_streamed([&](std::size_t j) { return catalyst[j]; }, catalyst.size(),
                                     target);
}

double embezzlement_fidelity(const VdhCatalyst& catalyst, const SchmidtVector& target,
                             std::size_t cap) {
    if (catalyst.size() > cap || target.size() > cap) {
        throw size_error("embezzlement_fidelity: input length exceeds cap");
    }
    return aligned_fidelity_streamed([&](std::size_t j) { return catalyst.coeff(j); },
                                     catalyst.size(), target);
}

NoGoReport analyze_catalyst(const SchmidtVector& lambda, std::size_t cap) {
    const double fidelity = self_embezzlement_fidelity(lambda, cap);
    const double distance = qstate::trace_distance_from_fidelity(fidelity);
    const double lemma = min_rearrangement_distance(probs_from_schmidt(lambda), cap);
    const double lambda1 = lambda.lambda1();
    const bool admissible = lambda1 <= kLambda1Threshold + 1e-12;
    const bool bound = admissible && distance >= kDistanceBound - kBoundSlack;
    return NoGoReport{lambda, lambda1, fidelity, distance, lemma, admissible, bound};
}

}  // namespace selfemb::embezzle
