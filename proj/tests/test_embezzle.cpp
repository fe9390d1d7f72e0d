#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "selfemb/embezzle.hpp"
#include "selfemb/errors.hpp"
#include "selfemb/sampling.hpp"

using namespace selfemb;
using qstate::ProbDist;
using qstate::SchmidtVector;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const double kSqrt23 = std::sqrt(2.0 / 3.0);
const double kSqrt13 = std::sqrt(1.0 / 3.0);

}  // namespace

TEST_CASE("self_embezzlement_fidelity on worked catalysts") {
    CHECK(embezzle::self_embezzlement_fidelity(SchmidtVector({1.0})) == 1.0);
    CHECK(embezzle::self_embezzlement_fidelity(SchmidtVector({kInvSqrt2, kInvSqrt2})) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-14));
    // lambda = (sqrt(2/3), sqrt(1/3)): align (2/3, sqrt2/3, sqrt2/3, 1/3)
    // against (sqrt(2/3), sqrt(1/3), 0, 0).
    const double expected = kSqrt23 * (2.0 / 3.0) + kSqrt13 * (std::numbers::sqrt2 / 3.0);
    CHECK(embezzle::self_embezzlement_fidelity(SchmidtVector({kSqrt23, kSqrt13})) ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(0.816496580927726).epsilon(1e-12));
}

TEST_CASE("RearrangementInstance pads to the squared support") {
    const embezzle::RearrangementInstance inst{ProbDist({0.5, 0.25, 0.25})};
    CHECK(inst.padded_length == 9);
    CHECK(inst.p.size() == 3);
}

TEST_CASE("min_rearrangement_distance on hand-computed distributions") {
    CHECK(embezzle::min_rearrangement_distance(ProbDist({1.0})) == 0.0);
    CHECK(embezzle::min_rearrangement_distance(ProbDist({0.5, 0.5})) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(embezzle::min_rearrangement_distance(ProbDist({2.0 / 3.0, 1.0 / 3.0})) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("brute_force_rearrangement_min agrees with the closed form") {
    CHECK(embezzle::brute_force_rearrangement_min(ProbDist({1.0})) == 0.0);
    CHECK(embezzle::brute_force_rearrangement_min(ProbDist({0.5, 0.5})) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(embezzle::brute_force_rearrangement_min(ProbDist({2.0 / 3.0, 1.0 / 3.0})) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(
        embezzle::brute_force_rearrangement_min(ProbDist({0.2, 0.2, 0.2, 0.2, 0.2})),
        size_error);
}

TEST_CASE("sorted alignment equals the brute-force minimum on random distributions") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + sampling::uniform_index(rng, 4);
        const ProbDist p = sampling::random_sorted_dist(rng, n);
        const double fast = embezzle::min_rearrangement_distance(p);
        const double brute = embezzle::brute_force_rearrangement_min(p);
        CHECK(std::abs(fast - brute) <= 1e-12);
    }
}

TEST_CASE("oracle equivalence on the 1/12 grid with support <= 3") {
    for (const ProbDist& p : embezzle::grid_distributions(12, 3)) {
        const double fast = embezzle::min_rearrangement_distance(p);
        const double brute = embezzle::brute_force_rearrangement_min(p);
        CHECK(std::abs(fast - brute) <= 1e-12);
    }
}

TEST_CASE("lemma_scan reports the proof quantities") {
    SUBCASE("grid 1/3, support 2") {
        const auto rows = embezzle::lemma_scan(1.0 / 3.0, 2);
        bool found = false;
        for (const auto& r : rows) {
            if (r.p.size() == 2 && r.p[0] == doctest::Approx(2.0 / 3.0)) {
                found = true;
                CHECK(r.distance == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
                CHECK(r.mu == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
                CHECK(r.m == 1);
                CHECK_FALSE(r.counterexample);
            }
        }
        CHECK(found);
    }
    SUBCASE("grid 1/2, support 2") {
        const auto rows = embezzle::lemma_scan(0.5, 2);
        REQUIRE(rows.size() == 1);  // only (1/2, 1/2) has p1 <= 2/3
        CHECK(rows[0].distance == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(rows[0].mu == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(rows[0].m == 1);
        CHECK_FALSE(rows[0].counterexample);
    }
    SUBCASE("no counterexamples on a finer grid") {
        for (const auto& r : embezzle::lemma_scan(1.0 / 8.0, 6)) {
            CHECK_FALSE(r.counterexample);
            CHECK(r.distance >= 2.0 / 9.0 - 1e-9);
            CHECK(r.mu > 1.0 / 3.0);
            CHECK(r.mu <= 2.0 / 3.0 + 1e-14);
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(embezzle::lemma_scan(0.0, 2), std::invalid_argument);
        CHECK_THROWS_AS(embezzle::lemma_scan(0.6, 2), std::invalid_argument);
        CHECK_THROWS_AS(embezzle::lemma_scan(0.3, 2), std::invalid_argument);  // not 1/q
        CHECK_THROWS_AS(embezzle::lemma_scan(0.25, 65), std::invalid_argument);
        CHECK_THROWS_AS(embezzle::grid_distributions(100, 64), size_error);  // > 1e6 points
    }
}

TEST_CASE("channel_selfembezzlement_fidelity") {
    const SchmidtVector epr({kInvSqrt2, kInvSqrt2});
    const SchmidtVector unit({1.0});

    SUBCASE("trivial environment reduces to the unitary case") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            const SchmidtVector lambda =
                sampling::random_schmidt(rng, 1 + sampling::uniform_index(rng, 12));
            CHECK(embezzle::channel_selfembezzlement_fidelity(lambda, unit) ==
                  embezzle::self_embezzlement_fidelity(lambda));
        }
    }
    SUBCASE("EPR environment is dominated by the unitary case") {
        const double channel = embezzle::channel_selfembezzlement_fidelity(epr, epr);
        CHECK(channel == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(channel <= embezzle::self_embezzlement_fidelity(epr));
    }
    SUBCASE("point catalyst aligns with the largest environment coefficient") {
        const SchmidtVector gamma({0.8, 0.6});
        CHECK(embezzle::channel_selfembezzlement_fidelity(unit, gamma) == 0.8);
    }
    SUBCASE("probability-level top-m sums are dominated") {
        // The sums of the m largest squared products with the environment
        // never exceed those without it; this is the step the channel bound
        // rests on.
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            const ProbDist p =
                sampling::random_sorted_dist(rng, 2 + sampling::uniform_index(rng, 6));
            const ProbDist q =
                sampling::random_sorted_dist(rng, 1 + sampling::uniform_index(rng, 4));
            std::vector<double> pp, ppq;
            for (double a : p.probs()) {
                for (double b : p.probs()) {
                    pp.push_back(a * b);
                    for (double c : q.probs()) ppq.push_back(a * b * c);
                }
            }
            std::sort(pp.rbegin(), pp.rend());
            std::sort(ppq.rbegin(), ppq.rend());
            double sum_pp = 0.0, sum_ppq = 0.0;
            for (std::size_t m = 0; m < pp.size(); ++m) {
                sum_pp += pp[m];
                sum_ppq += ppq[m];
                CHECK(sum_ppq <= sum_pp + 1e-12);
            }
        }
    }
}

TEST_CASE("nearest_product_extension") {
    SUBCASE("exact product input") {
        Eigen::VectorXcd psi(2);
        psi << 1.0, 0.0;
        Eigen::MatrixXcd phi(3, 2);
        phi.setZero();
        phi(1, 0) = 1.0;  // chi = |1>, product with psi
        const auto r = embezzle::nearest_product_extension(phi, psi);
        CHECK(r.overlap == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.p0 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("maximally entangled rank-2 input") {
        Eigen::VectorXcd psi(2);
        psi << 1.0, 0.0;
        Eigen::MatrixXcd phi(2, 2);
        phi << kInvSqrt2, 0.0, 0.0, kInvSqrt2;
        const auto r = embezzle::nearest_product_extension(phi, psi);
        CHECK(r.p0 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.overlap == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("randomized purifications satisfy the 1 - 2 eps bound") {
        std::mt19937_64 rng(31337);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto inst = sampling::make_proposition_instance(rng);
            const auto r = embezzle::nearest_product_extension(inst.phi, inst.psi);
            CHECK(r.overlap > 1.0 - 2.0 * inst.eps);
        }
    }
    SUBCASE("input validation") {
        Eigen::VectorXcd psi(2);
        psi << 1.0, 0.0;
        Eigen::MatrixXcd phi(2, 2);
        phi << 1.0, 0.0, 0.0, 1.0;  // Frobenius norm sqrt(2)
        CHECK_THROWS_AS(embezzle::nearest_product_extension(phi, psi), std::invalid_argument);
    }
}

TEST_CASE("vdh_catalyst") {
    CHECK(embezzle::vdh_catalyst(1).materialize().coeffs() == std::vector<double>{1.0});

    const SchmidtVector two = embezzle::vdh_catalyst(2).materialize();
    CHECK(two[0] == doctest::Approx(kSqrt23).epsilon(1e-14));
    CHECK(two[1] == doctest::Approx(kSqrt13).epsilon(1e-14));

    const SchmidtVector four = embezzle::vdh_catalyst(4).materialize();
    CHECK(four[0] * four[0] == doctest::Approx(12.0 / 25.0).epsilon(1e-13));
    CHECK(four[1] * four[1] == doctest::Approx(6.0 / 25.0).epsilon(1e-13));
    CHECK(four[2] * four[2] == doctest::Approx(4.0 / 25.0).epsilon(1e-13));
    CHECK(four[3] * four[3] == doctest::Approx(3.0 / 25.0).epsilon(1e-13));

    // Admissible for every n >= 2, with equality at n = 2.
    for (std::size_t n = 2; n <= 64; ++n) {
        CHECK(embezzle::vdh_catalyst(n).lambda1() <= kSqrt23 + 1e-12);
    }
    CHECK(embezzle::vdh_catalyst(2).lambda1() == doctest::Approx(kSqrt23).epsilon(1e-14));
    CHECK_THROWS_AS(embezzle::vdh_catalyst(0), std::invalid_argument);
}

TEST_CASE("embezzlement_fidelity") {
    const SchmidtVector epr({kInvSqrt2, kInvSqrt2});
    const SchmidtVector unit({1.0});

    SUBCASE("nothing to embezzle") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            const SchmidtVector c =
                sampling::random_schmidt(rng, 1 + sampling::uniform_index(rng, 12));
            CHECK(embezzle::embezzlement_fidelity(c, unit) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("vdh(2) against EPR, the hand-checkable four-term sort") {
        const double f = embezzle::embezzlement_fidelity(embezzle::vdh_catalyst(2), epr);
        CHECK(f == doctest::Approx(std::numbers::sqrt2 / 3.0 + 1.0 / 3.0).epsilon(1e-12));
        CHECK(f == doctest::Approx(0.804737854124365).epsilon(1e-12));
    }
    SUBCASE("streamed path equals the dense tensor path") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 100; ++trial) {
            const SchmidtVector c =
                sampling::random_schmidt(rng, 1 + sampling::uniform_index(rng, 24));
            const SchmidtVector t =
                sampling::random_schmidt(rng, 1 + sampling::uniform_index(rng, 8));
            const double streamed = embezzle::embezzlement_fidelity(c, t);
            const double dense = qstate::aligned_fidelity(c, qstate::tensor_sorted(c, t));
            CHECK(streamed == doctest::Approx(dense).epsilon(1e-14));
        }
    }
    SUBCASE("monotone in the catalyst size for the vdh family") {
        double prev = 0.0;
        for (std::size_t n = 2; n <= 256; n *= 2) {
            const double f = embezzle::embezzlement_fidelity(embezzle::vdh_catalyst(n), epr);
            CHECK(f >= prev);
            prev = f;
        }
    }
}

TEST_CASE("analyze_catalyst assembles a consistent no-go report") {
    const auto report = embezzle::analyze_catalyst(SchmidtVector({kInvSqrt2, kInvSqrt2}));
    CHECK(report.lambda1 == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(report.admissible);
    CHECK(report.fidelity_max == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(report.trace_distance_min ==
          doctest::Approx(qstate::trace_distance_from_fidelity(report.fidelity_max))
              .epsilon(1e-12));
    CHECK(report.lemma_distance == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.bound_satisfied);

    const auto point = embezzle::analyze_catalyst(SchmidtVector({1.0}));
    CHECK_FALSE(point.admissible);
    CHECK_FALSE(point.bound_satisfied);

    // Boundary catalyst: admissible at equality.
    const auto boundary = embezzle::analyze_catalyst(SchmidtVector({kSqrt23, kSqrt13}));
    CHECK(boundary.admissible);
    CHECK(boundary.bound_satisfied);
}

TEST_CASE("no-go bound holds for admissible catalysts") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 300; ++trial) {
        const SchmidtVector lambda = sampling::random_admissible_catalyst(rng, 32);
        const auto report = embezzle::analyze_catalyst(lambda);
        CHECK(report.admissible);
        CHECK(report.fidelity_max <= embezzle::kFidelityCeiling);
        CHECK(report.trace_distance_min >= 2.0 / 9.0 - 1e-9);
        CHECK(report.lemma_distance >= 2.0 / 9.0 - 1e-9);
        CHECK(report.bound_satisfied);
    }
}
