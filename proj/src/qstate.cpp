#include "selfemb/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "selfemb/errors.hpp"

namespace selfemb::qstate {

namespace {

void check_sorted_nonnegative(const std::vector<double>& v, const char* what) {
    if (v.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty vector");
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!(v[k] >= 0.0)) {
            throw std::invalid_argument(std::string(what) + ": negative or NaN entry");
        }
        if (k + 1 < v.size() && v[k] < v[k + 1]) {
            throw std::invalid_argument(std::string(what) + ": entries not nonincreasing");
        }
    }
}

std::vector<double> trim_trailing_zeros(std::vector<double> v) {
    while (v.size() > 1 && v.back() == 0.0) {
        v.pop_back();
    }
    return v;
}

}  // namespace

SchmidtVector::SchmidtVector(std::vector<double> coeffs, double norm_tol)
    : coeffs_(std::move(coeffs)) {
    check_sorted_nonnegative(coeffs_, "SchmidtVector");
    double sum_sq = 0.0;
    for (double c : coeffs_) sum_sq += c * c;
    if (std::abs(sum_sq - 1.0) > norm_tol) {
        throw std::invalid_argument("SchmidtVector: squares sum to " + std::to_string(sum_sq) +
                                    ", expected 1");
    }
}

SchmidtVector SchmidtVector::trimmed() const {
    return SchmidtVector(trim_trailing_zeros(coeffs_));
}

ProbDist::ProbDist(std::vector<double> probs, double norm_tol) : probs_(std::move(probs)) {
    check_sorted_nonnegative(probs_, "ProbDist");
    double sum = 0.0;
    for (double p : probs_) sum += p;
    if (std::abs(sum - 1.0) > norm_tol) {
        throw std::invalid_argument("ProbDist: entries sum to " + std::to_string(sum) +
                                    ", expected 1");
    }
}

ProbDist ProbDist::trimmed() const {
    return ProbDist(trim_trailing_zeros(probs_));
}

SchmidtVector schmidt_from_probs(const ProbDist& p) {
    std::vector<double> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = std::sqrt(p[k]);
    return SchmidtVector(std::move(out), kDerivedNormTol);
}

ProbDist probs_from_schmidt(const SchmidtVector& a) {
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * a[k];
    return ProbDist(std::move(out), kDerivedNormTol);
}

SchmidtVector tensor_sorted(const SchmidtVector& a, const SchmidtVector& b, std::size_t cap) {
    const std::size_t n = a.size(), m = b.size();
    if (m != 0 && n > cap / m) {
        throw size_error("tensor_sorted: product length " + std::to_string(n) + "*" +
                         std::to_string(m) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<double> prod;
    prod.reserve(n * m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            prod.push_back(a[j] * b[k]);
        }
    }
    std::stable_sort(prod.begin(), prod.end(), std::greater<double>());
    return SchmidtVector(std::move(prod), kDerivedNormTol);
}

double aligned_fidelity(const SchmidtVector& a, const SchmidtVector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    double f = 0.0;
    for (std::size_t k = 0; k < n; ++k) f += a[k] * b[k];
    return std::clamp(f, 0.0, 1.0);
}

double trace_distance_from_fidelity(double fidelity) {
    if (fidelity < -kNormTol || fidelity > 1.0 + kNormTol) {
        throw std::domain_error("trace_distance_from_fidelity: fidelity " +
                                std::to_string(fidelity) + " outside [0,1]");
    }
    const double f = std::clamp(fidelity, 0.0, 1.0);
    return std::sqrt(std::max(0.0, 1.0 - f * f));
}

double variation_distance(std::span<const double> p, std::span<const double> q) {
    const std::size_t n = std::max(p.size(), q.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double pk = k < p.size() ? p[k] : 0.0;
        const double qk = k < q.size() ? q[k] : 0.0;
        sum += std::abs(pk - qk);
    }
    return 0.5 * sum;
}

}  // namespace selfemb::qstate
