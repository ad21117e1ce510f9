#include "holevo/divergence_opt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "holevo/errors.hpp"
#include "holevo/kernels.hpp"
#include "holevo/random_states.hpp"

namespace holevo {
namespace {

// Projects a hermitian matrix onto {PSD, trace 1} by projecting its
// spectrum onto the probability simplex.
DensityMatrix project_to_density(const HermitianMatrix& h) {
    auto eig = eig_hermitian(h);  // values already descending
    const std::size_t d = eig.values.size();
    double running = 0.0, theta = 0.0;
    std::size_t support = 0;
    for (std::size_t j = 0; j < d; ++j) {
        running += eig.values[j];
        const double cand = (running - 1.0) / static_cast<double>(j + 1);
        if (eig.values[j] - cand > 0.0) {
            support = j + 1;
            theta = cand;
        }
    }
    std::vector<double> vals(d);
    for (std::size_t j = 0; j < support; ++j) vals[j] = std::max(eig.values[j] - theta, 0.0);
    return DensityMatrix::trusted(eig.reconstruct_with(vals));
}

struct Eval {
    double value = 0.0;
    HermitianMatrix subgrad;
    double subgrad_norm = 0.0;
};

// Shared per-iteration work: one eigendecomposition of rho_i - sigma per
// state gives both the trace norm and the trace-norm subgradient
// -(P+ - P-) through the spectral sign matrix.
class Objective {
  public:
    Objective(const std::vector<DensityMatrix>& states, std::vector<double> weights,
              bool maximum)
        : states_(states), weights_(std::move(weights)), maximum_(maximum) {}

    Eval operator()(const DensityMatrix& sigma) const {
        const std::size_t n = states_.size();
        const std::size_t d = sigma.dim();
        std::vector<double> dist(n);
        std::vector<SpectralDecomposition> eigs(n);
        for (std::size_t i = 0; i < n; ++i) {
            eigs[i] = eig_hermitian(states_[i].mat() - sigma.mat());
            double tn = 0.0;
            for (double v : eigs[i].values) tn += std::abs(v);
            dist[i] = 0.5 * tn;
        }

        Eval out;
        out.subgrad = HermitianMatrix(d);
        std::vector<double> signs;
        const auto& K = kernels::active();
        auto add_sign = [&](std::size_t i, double coeff) {
            signs.assign(eigs[i].values.size(), 0.0);
            for (std::size_t k = 0; k < signs.size(); ++k) {
                if (eigs[i].values[k] > 0.0) signs[k] = 1.0;
                else if (eigs[i].values[k] < 0.0) signs[k] = -1.0;
            }
            HermitianMatrix sgn = eigs[i].reconstruct_with(signs);
            K.caxpy(sgn.raw().size(), coeff, sgn.raw().data(), out.subgrad.raw().data());
        };

        if (maximum_) {
            const double top = *std::max_element(dist.begin(), dist.end());
            out.value = top;
            const double act = std::max(1e-12, 1e-8 * top);
            std::vector<std::size_t> active;
            for (std::size_t i = 0; i < n; ++i)
                if (dist[i] >= top - act) active.push_back(i);
            for (std::size_t i : active) add_sign(i, -0.5 / active.size());
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                out.value += weights_[i] * dist[i];
                if (weights_[i] > 0.0) add_sign(i, -0.5 * weights_[i]);
            }
        }
        out.subgrad_norm = out.subgrad.frobenius();
        return out;
    }

    double distance_only(const DensityMatrix& a, const DensityMatrix& b) const {
        return trace_distance(a, b);
    }

  private:
    const std::vector<DensityMatrix>& states_;
    std::vector<double> weights_;
    bool maximum_;
};

struct StartResult {
    DensityMatrix state;
    double value = 0.0;
    std::size_t iterations = 0;
    bool stalled = false;
};

StartResult run_start(const Objective& obj, DensityMatrix sigma, const SolverConfig& cfg) {
    StartResult r;
    Eval ev = obj(sigma);
    r.state = sigma;
    r.value = ev.value;

    const double c = 0.5 * std::max(ev.value, 0.01) / std::max(ev.subgrad_norm, 1e-12);
    const std::size_t window = std::max<std::size_t>(400, cfg.max_iters / 50);
    const double stall_eps = std::max(cfg.tolerance * 1e-2, 1e-13);
    double window_best = r.value;
    std::size_t k = 0;

    for (k = 1; k <= cfg.max_iters; ++k) {
        if (ev.subgrad_norm <= 1e-13) {  // exact optimum (e.g. single state)
            r.stalled = true;
            break;
        }
        const double alpha = c / std::sqrt(static_cast<double>(k));
        HermitianMatrix next = sigma.mat();
        kernels::active().caxpy(next.raw().size(), -alpha, ev.subgrad.raw().data(),
                                next.raw().data());
        sigma = project_to_density(next);
        ev = obj(sigma);
        if (ev.value < r.value) {
            r.value = ev.value;
            r.state = sigma;
        }
        if (k % window == 0) {
            if (window_best - r.value < stall_eps) {
                r.stalled = true;
                break;
            }
            window_best = r.value;
        }
    }
    r.iterations = std::min(k, cfg.max_iters);
    return r;
}

// Adaptive level (Polyak-type) refinement around the incumbent.  The c/sqrt(k)
// schedule localizes the optimum; this phase polishes to the tolerance,
// halving the assumed gap whenever a block fails to reach its level.
StartResult polish(const Objective& obj, StartResult in, const SolverConfig& cfg) {
    const std::size_t block = 200;
    const std::size_t budget = std::min<std::size_t>(cfg.max_iters, 20000);
    double delta = std::max(cfg.tolerance * 4.0, in.value * 0.01);
    DensityMatrix sigma = in.state;
    std::size_t used = 0;

    while (delta > cfg.tolerance * 0.05 && used < budget) {
        const double level = in.value - delta;
        bool reached = false;
        for (std::size_t j = 0; j < block && used < budget; ++j, ++used) {
            Eval ev = obj(sigma);
            if (ev.value < in.value) {
                in.value = ev.value;
                in.state = sigma;
            }
            if (ev.value <= level) {
                reached = true;
                break;
            }
            if (ev.subgrad_norm <= 1e-13) break;
            const double alpha =
                (ev.value - level) / (ev.subgrad_norm * ev.subgrad_norm);
            HermitianMatrix next = sigma.mat();
            kernels::active().caxpy(next.raw().size(), -alpha, ev.subgrad.raw().data(),
                                    next.raw().data());
            sigma = project_to_density(next);
        }
        if (!reached) {
            delta *= 0.5;
            sigma = in.state;
        }
    }
    in.iterations += used;
    in.stalled = in.stalled || delta <= cfg.tolerance * 0.05;
    return in;
}

DivergenceSolution solve(const std::vector<DensityMatrix>& states,
                         const std::vector<double>& weights, bool maximum,
                         const SolverConfig& cfg) {
    if (states.empty()) throw ValidationError("solver needs at least one state");
    const std::size_t d = states[0].dim();
    Objective obj(states, weights.empty() ? std::vector<double>(states.size(), 0.0) : weights,
                  maximum);

    std::vector<DensityMatrix> starts;
    {
        std::vector<double> mix = weights;
        if (maximum || mix.empty()) mix.assign(states.size(), 1.0 / states.size());
        starts.push_back(DensityMatrix::mixture(mix, states));
    }
    // Every member is a candidate warm start; for large sets an evenly
    // strided subsample keeps the start count bounded.
    const std::size_t max_member_starts = 12;
    const std::size_t stride =
        states.size() <= max_member_starts ? 1 : (states.size() + max_member_starts - 1) / max_member_starts;
    for (std::size_t i = 0; i < states.size(); i += stride) starts.push_back(states[i]);
    starts.push_back(chaotic_state(d));
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t r = 0; r < cfg.restarts; ++r)
        starts.push_back(random_density_matrix(d, rng));

    std::vector<StartResult> results;
    results.reserve(starts.size());
    for (auto& s : starts) results.push_back(run_start(obj, std::move(s), cfg));

    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].value < results[best_idx].value) best_idx = i;

    StartResult best = polish(obj, results[best_idx], cfg);

    DivergenceSolution sol;
    sol.optimal_state = best.state;
    sol.value = obj(best.state).value;
    for (const auto& r : results) sol.iterations += r.iterations;
    sol.iterations += best.iterations - results[best_idx].iterations;

    if (maximum) {
        // Chebyshev-radius lower bound from the farthest pair.
        double lb = 0.0;
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = i + 1; j < states.size(); ++j)
                lb = std::max(lb, 0.5 * trace_distance(states[i], states[j]));
        sol.certified_gap = std::max(0.0, sol.value - lb);
    } else {
        double lo = results[0].value, hi = results[0].value;
        for (const auto& r : results) {
            lo = std::min(lo, r.value);
            hi = std::max(hi, r.value);
        }
        sol.certified_gap = hi - lo;
    }

    if (!best.stalled) {
        throw SolverError("divergence solver exhausted its iteration budget while still improving",
                          sol);
    }
    return sol;
}

}  // namespace

DivergenceSolution amd_optimal(const DiscreteEnsemble& e, const SolverConfig& cfg) {
    return solve(e.states, e.probs, false, cfg);
}

DivergenceSolution mmd_optimal(const std::vector<DensityMatrix>& states,
                               const SolverConfig& cfg) {
    return solve(states, {}, true, cfg);
}

double chebyshev_radius(const std::vector<DensityMatrix>& states, const SolverConfig& cfg) {
    return mmd_optimal(states, cfg).value;
}

}  // namespace holevo
