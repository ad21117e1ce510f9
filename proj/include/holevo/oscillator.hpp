#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Multimode-oscillator spectral functions and the energy-constrained
// entropy/capacity bounds.  Everything is a closed-form mode sum or a 1-D
// minimization; no infinite-dimensional operators appear.

namespace holevo {

struct OscillatorSpec {
    std::size_t modes = 0;
    std::vector<double> hbar_omega;  // one positive energy quantum per mode

    static OscillatorSpec checked(std::size_t modes, std::vector<double> hbar_omega);
};

// E0 = (1/2) sum hbar_omega_i.
double oscillator_ground_energy(const OscillatorSpec& spec);

// Geometric mean of the mode quanta, the scale in the entropy majorant.
double oscillator_energy_scale(const OscillatorSpec& spec);

// The concave increasing majorant l log((E+E0)/(l E_scale)) + l of the
// Gibbs entropy, defined for E >= 0.
double hat_F(const OscillatorSpec& spec, double E);

struct GibbsResult {
    double lambda = 0.0;   // inverse-temperature parameter matching energy E
    double entropy = 0.0;  // F_H(E), the max entropy at mean energy E
};

// Solves sum_i hbar_omega_i (N_i(lambda) + 1/2) = E by bisection
// (relative tolerance 1e-12) and returns the thermal entropy
// sum_i [(N_i+1) log(N_i+1) - N_i log N_i].  Requires E > E0.
GibbsResult gibbs_entropy(const OscillatorSpec& spec, double E);

struct EnergyBoundInput {
    double epsilon = 0.0;       // metric divergence toward the reference state
    double avg_energy = 0.0;    // ensemble average energy (or output ceiling)
    double sigma_energy = 0.0;  // reference-state energy

    double kappa() const { return 0.5 * (1.0 + sigma_energy / avg_energy); }
};

// min over t in (0, 1/(2 eps)] of
//   eps ((1+kappa t)/(1-eps t) + t) majorant(avg/(eps t))
//     + h2(eps t) + g(eps (1+kappa t)/(1-eps t)),
// by a 400-point geometric grid plus golden-section refinement.
// The majorant must be positive, increasing and concave; returns 0 at eps = 0.
double prop3_bound(const EnergyBoundInput& in,
                   const std::function<double(double)>& majorant);

// prop3_bound with the oscillator majorant in its relaxed logarithmic form
// hat_F(avg) - l log(eps t).
double corollary6_bound(const OscillatorSpec& spec, const EnergyBoundInput& in);

struct Lemma1Result {
    double t_star = 0.0;
    double value = 0.0;
};

// Minimizes ((1+t)/(1-t) + t)(x - b log t + c) over t in (0, 1/2).
Lemma1Result lemma1_minimize(double x, double b, double c);

// Energy-constrained capacity bound: prop3_bound with the oscillator
// majorant, avg_energy = e_star (the output energy ceiling) and
// kappa = (1 + sigma_energy/e_star)/2.
double prop4_capacity_bound(const OscillatorSpec& spec, double epsilon, double e_star,
                            double sigma_energy);

}  // namespace holevo
