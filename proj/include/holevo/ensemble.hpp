#pragma once

#include <cstddef>
#include <vector>

#include "holevo/hermitian.hpp"

namespace holevo {

struct DiscreteEnsemble {
    std::vector<double> probs;
    std::vector<DensityMatrix> states;

    // Validates: non-empty, matching lengths, equal dimensions,
    // probabilities nonnegative with total within 1e-6 of 1.
    static DiscreteEnsemble checked(std::vector<double> probs,
                                    std::vector<DensityMatrix> states);

    std::size_t size() const { return probs.size(); }
    std::size_t dim() const { return states.empty() ? 0 : states[0].dim(); }
};

DensityMatrix average_state(const DiscreteEnsemble& e);

// Holevo quantity in nats.  Computed as sum_i p_i H(rho_i || rho_bar) and
// cross-checked against H(rho_bar) - sum_i p_i H(rho_i) to 1e-8.
double holevo_chi(const DiscreteEnsemble& e);

// D(E|sigma) = (1/2) sum_i p_i ||rho_i - sigma||_1.
double metric_divergence(const DiscreteEnsemble& e, const DensityMatrix& sigma);

// The pair of ensembles built from the positive and negative parts of
// rho_i - sigma.  Members with ||rho_i - sigma||_1 <= tol::zero_norm are
// dropped (they contribute nothing).  epsilon = D(E|sigma).
struct DerivedEnsembles {
    double epsilon = 0.0;
    std::vector<std::size_t> kept;  // indices into the source ensemble
    DiscreteEnsemble plus, minus;   // probabilities t_i, states tau_i^±
};

DerivedEnsembles derived_ensembles(const DiscreteEnsemble& e, const DensityMatrix& sigma);

// T_chi(E|sigma) = epsilon * (chi(plus) - chi(minus)); 0 when epsilon = 0.
double t_chi(const DiscreteEnsemble& e, const DensityMatrix& sigma);

}  // namespace holevo
