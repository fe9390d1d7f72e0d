#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace selfemb::qstate {

// Construction tolerance for normalization; derived quantities get a looser
// budget because they accumulate over up to 2^24 terms.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kDerivedNormTol = 1e-10;
inline constexpr std::size_t kDefaultProductCap = std::size_t{1} << 24;

// Nonincreasing nonnegative amplitudes with unit sum of squares.
// Trailing zeros are kept; use trimmed() to drop them explicitly.
class SchmidtVector {
public:
    explicit SchmidtVector(std::vector<double> coeffs, double norm_tol = kNormTol);

    const std::vector<double>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    double operator[](std::size_t k) const { return coeffs_[k]; }
    double lambda1() const { return coeffs_.front(); }

    SchmidtVector trimmed() const;

private:
    std::vector<double> coeffs_;
};

// Nonincreasing probability vector summing to one.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> probs, double norm_tol = kNormTol);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t k) const { return probs_[k]; }

    ProbDist trimmed() const;

private:
    std::vector<double> probs_;
};

// Elementwise square root; ordering is preserved.
SchmidtVector schmidt_from_probs(const ProbDist& p);

// Elementwise squares of the amplitudes.
ProbDist probs_from_schmidt(const SchmidtVector& a);

// All pairwise products a[j]*b[k], sorted nonincreasing.
// Throws size_error if |a|*|b| exceeds the cap.
SchmidtVector tensor_sorted(const SchmidtVector& a, const SchmidtVector& b,
                            std::size_t cap = kDefaultProductCap);

// Maximum overlap |<target|(U_A x U_B)|initial>| over local unitaries for
// bipartite pure states with these Schmidt coefficients: the dot product of
// the two sorted spectra, the shorter zero-padded. Clamped into [0,1].
double aligned_fidelity(const SchmidtVector& a, const SchmidtVector& b);

// Pure-state identity D = sqrt(1 - F^2).
// Throws std::domain_error if F is outside [0,1] by more than 1e-12.
double trace_distance_from_fidelity(double fidelity);

// 1/2 * sum |p[k] - q[k]|, the shorter vector zero-padded.
double variation_distance(std::span<const double> p, std::span<const double> q);

}  // namespace selfemb::qstate
