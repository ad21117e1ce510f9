#pragma once

#include <string>
#include <vector>

#include "holevo/divergence_opt.hpp"
#include "holevo/ensemble.hpp"

// Upper bounds on the Holevo quantity, in nats.  Bound names are stable
// string identifiers used by reports and by the CLI JSON output.

namespace holevo {

struct BoundEntry {
    std::string name;
    double value = 0.0;
    std::string reference;  // which reference state the bound was taken at
};

struct BoundReport {
    double chi_exact = 0.0;
    std::vector<BoundEntry> entries;
};

// upsilon_m = (1/2) max_{i,j} ||rho_i - rho_j||_1 and the two bounds
// upsilon_m * S({p_i}) and upsilon_m * log n.
struct AudenaertBounds {
    double upsilon_m = 0.0;
    double via_entropy = 0.0;
    double via_log_n = 0.0;
};
AudenaertBounds audenaert_bounds(const DiscreteEnsemble& e);

// The three reference-state bounds built from the derived ensembles:
//   eps * chi(plus) + g(eps)
//   S({(1/2) p_i ||rho_i - sigma||_1}) + g(eps)
//   H(sum_i p_i [rho_i - sigma]_+) + g(eps)
struct Prop1Bounds {
    double epsilon = 0.0;
    double via_plus_chi = 0.0;
    double via_weight_entropy = 0.0;
    double via_positive_part = 0.0;
};
Prop1Bounds prop1_bounds(const DiscreteEnsemble& e, const DensityMatrix& sigma);

// The entropy-free relaxations at a reference state:
//   (1/2) sup_i ||rho_i - sigma||_1 * S({p_j}) + g(eps)
//   eps * log n + g(eps)
//   eps * log d + g(eps)
struct Corollary1Bounds {
    double epsilon = 0.0;
    double via_sup_entropy = 0.0;
    double via_log_n = 0.0;
    double via_log_dim = 0.0;
};
Corollary1Bounds corollary1_bounds(const DiscreteEnsemble& e, const DensityMatrix& sigma);

// Bounds at sigma = average state, phrased through the complementary states
// rho_hat_i.  Emits both the g(eps) form and the g(upsilon_m (1 - sum p^2))
// variant of the first family (names with suffix "b").
std::vector<BoundEntry> avg_state_bounds(const DiscreteEnsemble& e);

// Bounds at sigma = rho_{i0}.
std::vector<BoundEntry> single_state_bounds(const DiscreteEnsemble& e, std::size_t i0);

// Bounds from solved average / maximal metric divergences.
std::vector<BoundEntry> divergence_bounds(const DiscreteEnsemble& e, double eps_av,
                                          double eps_m);

// Assembles everything: Audenaert, the chaotic / average / AMD / MMD
// reference states, the per-state families, and the divergence bounds.
BoundReport full_report(const DiscreteEnsemble& e, const SolverConfig& cfg);

}  // namespace holevo
