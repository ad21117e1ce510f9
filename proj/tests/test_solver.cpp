#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "holevo/divergence_opt.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/random_states.hpp"

using namespace holevo;

namespace {

DiscreteEnsemble random_ensemble(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    std::vector<double> probs(n);
    double tot = 0.0;
    for (auto& p : probs) tot += (p = uni(rng));
    for (auto& p : probs) p /= tot;
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < n; ++i)
        states.push_back(i % 2 ? random_density_matrix(d, rng) : random_pure_state(d, rng));
    return DiscreteEnsemble::checked(std::move(probs), std::move(states));
}

SolverConfig tight_cfg() {
    SolverConfig cfg;
    cfg.tolerance = 1e-7;
    cfg.restarts = 2;
    cfg.seed = 515151;
    return cfg;
}

struct Bloch {
    double x = 0.0, y = 0.0, z = 0.0;
};

Bloch to_bloch(const DensityMatrix& rho) {
    return {2.0 * rho.mat()(0, 1).real(), -2.0 * rho.mat()(0, 1).imag(),
            rho.mat()(0, 0).real() - rho.mat()(1, 1).real()};
}

// Qubit trace distance is half the Euclidean distance of Bloch vectors.
double bloch_dist(const Bloch& a, const Bloch& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

TEST_SUITE("divergence-solvers") {
    TEST_CASE("two-state closed forms") {
        std::mt19937_64 rng(51);
        for (int rep = 0; rep < 6; ++rep) {
            const std::size_t d = 2 + rep % 3;
            const auto r1 = random_density_matrix(d, rng);
            const auto r2 = random_pure_state(d, rng);
            const double p1 = 0.3 + 0.05 * rep;
            const auto e = DiscreteEnsemble::checked({p1, 1.0 - p1}, {r1, r2});
            const double dist = trace_distance(r1, r2);

            // Average divergence: min(p1, p2) * dist, attained at the more
            // probable member.
            const auto amd = amd_optimal(e, tight_cfg());
            CHECK(amd.value == doctest::Approx(std::min(p1, 1.0 - p1) * dist).epsilon(5e-5));
            // At p1 = p2 every point between the members is optimal, so the
            // location is only pinned down away from the tie.
            if (std::fabs(p1 - 0.5) > 0.02) {
                const auto& heavier = p1 >= 0.5 ? r1 : r2;
                CHECK(trace_distance(amd.optimal_state, heavier) < 2e-3);
            }

            // Worst-case divergence: half the pairwise distance, attained
            // at the midpoint.
            const auto mmd = mmd_optimal(e.states, tight_cfg());
            CHECK(mmd.value == doctest::Approx(0.5 * dist).epsilon(5e-5));
        }
    }

    TEST_CASE("solutions are feasible, certified and consistent") {
        std::mt19937_64 rng(52);
        for (int rep = 0; rep < 8; ++rep) {
            const std::size_t d = 2 + rep % 3;
            const auto e = random_ensemble(2 + rep % 4, d, rng);
            const auto amd = amd_optimal(e, tight_cfg());
            const auto mmd = mmd_optimal(e.states, tight_cfg());

            // Returned value is the objective at the returned state.
            CHECK(amd.value ==
                  doctest::Approx(metric_divergence(e, amd.optimal_state)).epsilon(1e-10));
            double worst = 0.0;
            for (const auto& st : e.states)
                worst = std::max(worst, trace_distance(st, mmd.optimal_state));
            CHECK(mmd.value == doctest::Approx(worst).epsilon(1e-10));

            CHECK(amd.certified_gap >= 0.0);
            CHECK(mmd.certified_gap >= 0.0);

            // Optimality beats the natural candidate states.
            CHECK(amd.value <= metric_divergence(e, average_state(e)) + 1e-6);
            for (const auto& st : e.states)
                CHECK(amd.value <= metric_divergence(e, st) + 1e-6);

            // Average divergence never exceeds the worst-case one.
            CHECK(amd.value <= mmd.value + 1e-6);

            // Chebyshev radius at least half the diameter.
            double diam = 0.0;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j)
                    diam = std::max(diam, trace_distance(e.states[i], e.states[j]));
            CHECK(mmd.value >= 0.5 * diam - 1e-6);
        }
    }

    TEST_CASE("objective is convex along a segment") {
        std::mt19937_64 rng(53);
        const auto e = random_ensemble(4, 3, rng);
        const auto s1 = random_density_matrix(3, rng);
        const auto s2 = random_density_matrix(3, rng);
        const auto mid = DensityMatrix::mixture({0.5, 0.5}, {s1, s2});
        CHECK(metric_divergence(e, mid) <=
              0.5 * (metric_divergence(e, s1) + metric_divergence(e, s2)) + 1e-12);
    }

    TEST_CASE("qubit optima match a dense grid oracle") {
        std::mt19937_64 rng(54);
        for (int rep = 0; rep < 3; ++rep) {
            const auto e = random_ensemble(3, 2, rng);
            std::vector<Bloch> pts;
            for (const auto& st : e.states) pts.push_back(to_bloch(st));

            double best_avg = 1e9, best_max = 1e9;
            const double h = 0.04;
            for (double x = -1.0; x <= 1.0; x += h)
                for (double y = -1.0; y <= 1.0; y += h)
                    for (double z = -1.0; z <= 1.0; z += h) {
                        if (x * x + y * y + z * z > 1.0) continue;
                        const Bloch s{x, y, z};
                        double avg = 0.0, mx = 0.0;
                        for (std::size_t i = 0; i < pts.size(); ++i) {
                            const double t = bloch_dist(pts[i], s);
                            avg += e.probs[i] * t;
                            mx = std::max(mx, t);
                        }
                        best_avg = std::min(best_avg, avg);
                        best_max = std::min(best_max, mx);
                    }

            CHECK(std::abs(amd_optimal(e, tight_cfg()).value - best_avg) < 2e-2);
            CHECK(std::abs(mmd_optimal(e.states, tight_cfg()).value - best_max) < 2e-2);
        }
    }

    TEST_CASE("exhausted budget raises with the best iterate attached") {
        std::mt19937_64 rng(55);
        const auto e = random_ensemble(4, 4, rng);
        SolverConfig cfg;
        cfg.tolerance = 1e-15;  // unreachable
        cfg.max_iters = 3;
        cfg.restarts = 0;
        CHECK_THROWS_AS(amd_optimal(e, cfg), SolverError);
        try {
            amd_optimal(e, cfg);
        } catch (const SolverError& err) {
            const auto& best = err.best();
            CHECK(best.value ==
                  doctest::Approx(metric_divergence(e, best.optimal_state)).epsilon(1e-10));
        }
    }
}
