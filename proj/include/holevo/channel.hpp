#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holevo/divergence_opt.hpp"
#include "holevo/hermitian.hpp"

// Finite-dimensional channels, the closed-form example families, output
// Chebyshev-radius estimation and the capacity bound r log d_B + g(r).

namespace holevo {

struct QuantumChannel {
    enum class Kind { kraus, classical_quantum };

    Kind kind = Kind::kraus;
    std::vector<Matrix> kraus_ops;          // each dim_out x dim_in
    std::vector<DensityMatrix> cq_outputs;  // classical-quantum: |k><k| -> outputs[k]

    // Closed-form family tag ("" when untagged): "depolarizing", "erasure",
    // "mixing", "cq", "cq-shifted-uniform", "cq-projector".
    std::string family;
    double p = 0.0;       // family noise/mixing parameter
    std::size_t rank = 0; // spectrum parameter r of the cq example families

    std::size_t dim_in() const;
    std::size_t dim_out() const;

    // Validates trace preservation sum_k K_k^dag K_k = I to 1e-9.
    static QuantumChannel from_kraus(std::vector<Matrix> ops);
    // rho -> sum_k <k|rho|k> outputs[k]; input dim = number of outputs.
    static QuantumChannel classical_quantum(std::vector<DensityMatrix> outputs);
};

DensityMatrix apply_channel(const QuantumChannel& phi, const DensityMatrix& rho);

// (1-p) rho + p I/d, via the generalized Pauli Kraus set.
QuantumChannel make_depolarizing(std::size_t d, double p);

// rho -> diag((1-p) rho, p tr rho), output dimension d+1.
QuantumChannel make_erasure(std::size_t d, double p);

// rho -> (1-p) rho + p sigma.
QuantumChannel make_mixing(const DensityMatrix& sigma, double p);

QuantumChannel make_cq(std::vector<DensityMatrix> outputs);

// The cyclic-shift classical-quantum family whose output set is the convex
// hull of d isomorphic states averaging to the chaotic state.  Two spectrum
// shapes with closed-form capacity and output radius.
struct CqSpectrumCase {
    enum class Shape { shifted_uniform, projector };
    Shape shape;
    std::size_t d = 0;  // output dimension
    std::size_t r = 0;  // spectrum parameter
};
QuantumChannel make_example_cq(const CqSpectrumCase& c);

// Computational-basis pure states plus `random_count` Haar-random pure
// states (default probe budget 200).
std::vector<DensityMatrix> default_probe_states(std::size_t dim, std::size_t random_count,
                                                std::uint64_t seed);

// Chebyshev radius of the probe image set: a lower estimate of
// r_Phi = Cr(Phi(S(H_A))) that improves as probes fill the pure states.
double output_chebyshev_radius(const QuantumChannel& phi,
                               const std::vector<DensityMatrix>& probes,
                               const SolverConfig& cfg);

// Exact r_Phi where the family admits one (depolarizing, erasure, the cq
// example family); nullopt otherwise.
std::optional<double> closed_form_output_radius(const QuantumChannel& phi);

// Closed-form Holevo capacity for the tagged families; nullopt otherwise.
std::optional<double> exact_capacity(const QuantumChannel& phi);

// r_phi log d_B + g(r_phi); requires 0 <= r_phi <= 1.
double prop2_bound(double r_phi, std::size_t dim_b);

struct CapacityBoundReport {
    double r_phi = 0.0;
    double bound = 0.0;
    std::optional<double> exact;
    std::string family;
    std::size_t probe_count = 0;  // 0 when r_phi came from a closed form
};

// Assembles r_phi (closed form when available, probe estimate otherwise),
// the capacity bound and the exact capacity if known.
CapacityBoundReport capacity_report(const QuantumChannel& phi, const SolverConfig& cfg,
                                    std::size_t random_probes = 200,
                                    std::uint64_t probe_seed = 7777);

// Example-family report with everything in closed form.
CapacityBoundReport cq_capacity_bound_report(const QuantumChannel& phi,
                                             const CqSpectrumCase& c);

}  // namespace holevo
