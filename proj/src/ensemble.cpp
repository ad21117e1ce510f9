#include "holevo/ensemble.hpp"

#include <cmath>
#include <sstream>

#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"

namespace holevo {

DiscreteEnsemble DiscreteEnsemble::checked(std::vector<double> probs,
                                           std::vector<DensityMatrix> states) {
    if (probs.empty() || probs.size() != states.size())
        throw ValidationError("ensemble needs matching, non-empty probabilities and states");
    double total = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw ValidationError("ensemble probabilities must be nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-6) {
        std::ostringstream os;
        os << "ensemble probabilities sum to " << total << ", expected 1 within 1e-6";
        throw ValidationError(os.str());
    }
    const std::size_t d = states[0].dim();
    for (const auto& s : states)
        if (s.dim() != d) throw ValidationError("ensemble states must share one dimension");
    return DiscreteEnsemble{std::move(probs), std::move(states)};
}

DensityMatrix average_state(const DiscreteEnsemble& e) {
    return DensityMatrix::mixture(e.probs, e.states);
}

double holevo_chi(const DiscreteEnsemble& e) {
    const DensityMatrix rho_bar = average_state(e);
    double chi = 0.0;
    double ent_route = von_neumann_entropy_ext(rho_bar.mat());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) continue;
        ExtendedReal rel = relative_entropy(e.states[i], rho_bar);
        if (!rel.is_finite())
            throw NumericError("state support escapes the average state; chi is ill-conditioned");
        chi += e.probs[i] * rel.value();
        ent_route -= e.probs[i] * von_neumann_entropy_ext(e.states[i].mat());
    }
    if (std::abs(chi - ent_route) > 1e-8 * std::max(1.0, std::abs(chi))) {
        std::ostringstream os;
        os << "chi cross-check failed: relative-entropy route " << chi
           << " vs entropy-difference route " << ent_route;
        throw NumericError(os.str());
    }
    return chi;
}

double metric_divergence(const DiscreteEnsemble& e, const DensityMatrix& sigma) {
    if (e.dim() != sigma.dim())
        throw ValidationError("metric divergence needs equal dimensions");
    double d = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) continue;
        d += e.probs[i] * trace_distance(e.states[i], sigma);
    }
    return d;
}

DerivedEnsembles derived_ensembles(const DiscreteEnsemble& e, const DensityMatrix& sigma) {
    if (e.dim() != sigma.dim())
        throw ValidationError("derived ensembles need equal dimensions");
    DerivedEnsembles out;
    std::vector<double> weights;
    std::vector<DensityMatrix> plus, minus;
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        HermitianMatrix diff = e.states[i].mat() - sigma.mat();
        auto parts = jordan_decomposition(diff);
        const double tn = parts.pos.trace() + parts.neg.trace();
        out.epsilon += 0.5 * e.probs[i] * tn;
        if (tn <= tol::zero_norm || e.probs[i] == 0.0) continue;
        out.kept.push_back(i);
        weights.push_back(e.probs[i] * tn);
        total += e.probs[i] * tn;
        HermitianMatrix p = parts.pos;
        p *= 1.0 / parts.pos.trace();
        HermitianMatrix m = parts.neg;
        m *= 1.0 / parts.neg.trace();
        plus.push_back(DensityMatrix::trusted(std::move(p)));
        minus.push_back(DensityMatrix::trusted(std::move(m)));
    }
    if (!weights.empty()) {
        for (double& w : weights) w /= total;
        std::vector<double> w2 = weights;
        out.plus = DiscreteEnsemble{weights, std::move(plus)};
        out.minus = DiscreteEnsemble{std::move(w2), std::move(minus)};
    }
    return out;
}

double t_chi(const DiscreteEnsemble& e, const DensityMatrix& sigma) {
    DerivedEnsembles d = derived_ensembles(e, sigma);
    if (d.kept.empty() || d.epsilon <= 0.0) return 0.0;
    return d.epsilon * (holevo_chi(d.plus) - holevo_chi(d.minus));
}

}  // namespace holevo
