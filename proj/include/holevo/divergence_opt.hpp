#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "holevo/ensemble.hpp"
#include "holevo/hermitian.hpp"

// Projected subgradient solvers for the two convex reference-state
// problems: average metric divergence (AMD) and maximal metric divergence
// (MMD, the Chebyshev center of the state set).

namespace holevo {

struct SolverConfig {
    double tolerance = 1e-4;
    std::size_t max_iters = 50000;  // per warm start
    std::size_t restarts = 5;       // random starts beyond the deterministic ones
    std::uint64_t seed = 12345;
};

struct DivergenceSolution {
    DensityMatrix optimal_state;
    double value = 0.0;
    std::size_t iterations = 0;   // summed over all starts
    double certified_gap = 0.0;   // distance to the best known lower bound
};

// Thrown when the iteration budget ran out while the objective was still
// moving by more than the tolerance.  Carries the best iterate found.
class SolverError : public std::runtime_error {
  public:
    SolverError(const std::string& what, DivergenceSolution best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const DivergenceSolution& best() const { return best_; }

  private:
    DivergenceSolution best_;
};

// min over density sigma of (1/2) sum_i p_i ||rho_i - sigma||_1.
DivergenceSolution amd_optimal(const DiscreteEnsemble& e, const SolverConfig& cfg);

// min over density sigma of (1/2) max_i ||rho_i - sigma||_1.
// Probabilities do not enter the objective.
DivergenceSolution mmd_optimal(const std::vector<DensityMatrix>& states,
                               const SolverConfig& cfg);

double chebyshev_radius(const std::vector<DensityMatrix>& states, const SolverConfig& cfg);

}  // namespace holevo
