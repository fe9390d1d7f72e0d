#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "selfemb/qstate.hpp"

namespace selfemb::embezzle {

inline constexpr double kDistanceBound = 2.0 / 9.0;
inline constexpr double kBoundSlack = 1e-9;
// Fidelity ceiling sqrt(1 - (2/9)^2) quoted to six digits.
inline constexpr double kFidelityCeiling = 0.974996;
// Admissibility gate on the largest Schmidt coefficient.
inline constexpr double kLambda1Threshold = 0.81649658092772603;  // sqrt(2/3)

// Outcome of the unitary no-go analysis for one catalyst.
struct NoGoReport {
    qstate::SchmidtVector catalyst;
    double lambda1;
    double fidelity_max;
    double trace_distance_min;
    double lemma_distance;
    bool admissible;
    bool bound_satisfied;
};

// Finite restriction of a rearrangement problem: p padded to |p|^2 slots.
struct RearrangementInstance {
    qstate::ProbDist p;
    std::size_t padded_length;

    explicit RearrangementInstance(qstate::ProbDist dist)
        : p(std::move(dist)), padded_length(p.size() * p.size()) {}
};

// Maximal fidelity over local unitaries between psi (x) |11> and psi (x) psi,
// for a catalyst with Schmidt coefficients lambda: the sorted alignment of
// pad(lambda, n^2) against the sorted pairwise products.
double self_embezzlement_fidelity(const qstate::SchmidtVector& lambda,
                                  std::size_t cap = qstate::kDefaultProductCap);

// Minimum over all rearrangements of p's masses into n^2 slots of the
// variation distance to p (x) p. Sorting both sides attains the minimum
// (L1 rearrangement inequality); brute_force_rearrangement_min checks this
// independently at small scale.
double min_rearrangement_distance(const qstate::ProbDist& p,
                                  std::size_t cap = qstate::kDefaultProductCap);

// Exact minimum by enumerating every placement of the nonzero masses into
// the n^2 slots. Oracle scale only: throws size_error for |p| > 4.
double brute_force_rearrangement_min(const qstate::ProbDist& p);

struct LemmaScanRow {
    qstate::ProbDist p;
    double distance;   // min_rearrangement_distance(p)
    double mu;         // p(S) for S = {1..m}
    std::size_t m;     // max prefix with p_1+...+p_m <= 2/3
    bool counterexample;
};

// All sorted distributions with entries on the 1/round(1/grid_step) grid,
// support <= max_support and p_1 <= 2/3, with their rearrangement distances
// and the proof quantities. Any row with distance < 2/9 - 1e-9 is flagged.
std::vector<LemmaScanRow> lemma_scan(double grid_step, std::size_t max_support);

// Grid enumeration shared by lemma_scan and the acceptance suite: sorted
// distributions with entries k/q, support <= max_support, and first entry
// <= max_first_num/max_first_den (exact rational filter).
std::vector<qstate::ProbDist> grid_distributions(unsigned q, std::size_t max_support,
                                                 unsigned max_first_num = 1,
                                                 unsigned max_first_den = 1);

// Maximal overlap |<psi_final, phi (x) psi_target>| over the environment's
// product structure: pad(lambda) aligned against sorted products
// lambda_i * lambda_j * gamma_k.
double channel_selfembezzlement_fidelity(const qstate::SchmidtVector& lambda,
                                         const qstate::SchmidtVector& gamma,
                                         std::size_t cap = qstate::kDefaultProductCap);

struct ProductExtension {
    std::size_t index;  // Schmidt index of the selected right vector
    double p0;          // its Schmidt probability
    double overlap;     // p0 * |<v_i0, psi>|^2
};

// Schmidt-decomposes phi across H'|H (rows index H', columns H), picks the
// right vector closest to psi, and reports the product-state overlap.
// Whenever <psi|Tr_H'(phi phi*)|psi> > 1 - eps the overlap exceeds 1 - 2 eps.
ProductExtension nearest_product_extension(const Eigen::MatrixXcd& phi_matrix,
                                           const Eigen::VectorXcd& psi);

// Harmonic-weighted catalyst: coeff(j) = (1/sqrt(j)) / sqrt(H_n), j = 1..n.
// Stored as the rule plus the normalization so large n stays cheap.
class VdhCatalyst {
public:
    explicit VdhCatalyst(std::size_t n);

    std::size_t size() const { return n_; }
    double harmonic() const { return harmonic_; }
    double coeff(std::size_t j) const;  // zero-based index
    double lambda1() const { return coeff(0); }

    qstate::SchmidtVector materialize() const;

private:
    std::size_t n_;
    double harmonic_;
};

inline VdhCatalyst vdh_catalyst(std::size_t n) { return VdhCatalyst(n); }

// aligned_fidelity(pad(catalyst), tensor_sorted(catalyst, target)).
// Only the largest |catalyst| products contribute (the padding is zero
// beyond them), so the sorted products are streamed through a heap instead
// of being materialized.
double embezzlement_fidelity(const qstate::SchmidtVector& catalyst,
                             const qstate::SchmidtVector& target,
                             std::size_t cap = qstate::kDefaultProductCap);
double embezzlement_fidelity(const VdhCatalyst& catalyst, const qstate::SchmidtVector& target,
                             std::size_t cap = qstate::kDefaultProductCap);

// Full unitary no-go analysis of one catalyst.
NoGoReport analyze_catalyst(const qstate::SchmidtVector& lambda,
                            std::size_t cap = qstate::kDefaultProductCap);

}  // namespace selfemb::embezzle
