#include "holevo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"

namespace holevo {
namespace {

double log_dim(const DiscreteEnsemble& e) { return std::log(static_cast<double>(e.dim())); }
double log_n(const DiscreteEnsemble& e) { return std::log(static_cast<double>(e.size())); }

// 1/2 max_{i,j} ||rho_i - rho_j||_1
double max_pair_divergence(const DiscreteEnsemble& e) {
    double m = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            m = std::max(m, trace_distance(e.states[i], e.states[j]));
    return m;
}

}  // namespace

AudenaertBounds audenaert_bounds(const DiscreteEnsemble& e) {
    AudenaertBounds b;
    b.upsilon_m = max_pair_divergence(e);
    b.via_entropy = b.upsilon_m * shannon_entropy_ext(e.probs);
    b.via_log_n = b.upsilon_m * log_n(e);
    return b;
}

Prop1Bounds prop1_bounds(const DiscreteEnsemble& e, const DensityMatrix& sigma) {
    if (e.dim() != sigma.dim()) throw ValidationError("reference state dimension mismatch");
    auto der = derived_ensembles(e, sigma);
    Prop1Bounds b;
    b.epsilon = der.epsilon;
    const double ge = g_func(der.epsilon);
    if (der.epsilon <= 0.0 || der.plus.size() == 0) {
        b.via_plus_chi = b.via_weight_entropy = b.via_positive_part = ge;
        return b;
    }
    b.via_plus_chi = der.epsilon * holevo_chi(der.plus) + ge;

    // The kept weights t_i are (1/2) p_i ||rho_i - sigma||_1 normalized by
    // epsilon; scaling back gives the unnormalized weight vector.
    std::vector<double> w(der.plus.probs);
    for (double& x : w) x *= der.epsilon;
    b.via_weight_entropy = shannon_entropy_ext(w) + ge;

    // sum_i p_i [rho_i - sigma]_+ = epsilon * average of the plus ensemble.
    HermitianMatrix pos = average_state(der.plus).mat();
    pos *= der.epsilon;
    b.via_positive_part = von_neumann_entropy_ext(pos) + ge;
    return b;
}

Corollary1Bounds corollary1_bounds(const DiscreteEnsemble& e, const DensityMatrix& sigma) {
    if (e.dim() != sigma.dim()) throw ValidationError("reference state dimension mismatch");
    Corollary1Bounds b;
    b.epsilon = metric_divergence(e, sigma);
    const double ge = g_func(b.epsilon);
    double sup = 0.0;
    for (const auto& s : e.states) sup = std::max(sup, trace_distance(s, sigma));
    b.via_sup_entropy = sup * shannon_entropy_ext(e.probs) + ge;
    b.via_log_n = b.epsilon * log_n(e) + ge;
    b.via_log_dim = b.epsilon * log_dim(e) + ge;
    return b;
}

std::vector<BoundEntry> avg_state_bounds(const DiscreteEnsemble& e) {
    const DensityMatrix avg = average_state(e);
    const std::size_t n = e.size();

    // eps two ways: directly against the average state, and through the
    // complementary states rho_hat_i = (rho_bar - p_i rho_i) / (1 - p_i).
    double eps_direct = metric_divergence(e, avg);
    double eps_compl = 0.0;
    std::vector<double> w(n, 0.0);  // (1/2) p_i (1-p_i) ||rho_i - rho_hat_i||_1
    for (std::size_t i = 0; i < n; ++i) {
        const double q = 1.0 - e.probs[i];
        if (e.probs[i] <= 0.0 || q <= 1e-12) continue;
        HermitianMatrix rest = avg.mat() - e.probs[i] * e.states[i].mat();
        rest *= 1.0 / q;
        const DensityMatrix hat = DensityMatrix::trusted(rest);
        w[i] = 0.5 * e.probs[i] * q * (2.0 * trace_distance(e.states[i], hat));
        eps_compl += w[i];
    }
    if (std::abs(eps_direct - eps_compl) > 1e-9 * std::max(1.0, eps_direct))
        throw NumericError("average-state divergence consistency check failed");
    const double eps = eps_direct;

    const double upsilon_m = max_pair_divergence(e);
    double sum_p2 = 0.0;
    std::vector<double> pq(n);
    for (std::size_t i = 0; i < n; ++i) {
        sum_p2 += e.probs[i] * e.probs[i];
        pq[i] = e.probs[i] * (1.0 - e.probs[i]);
    }
    const double ups_var = upsilon_m * (1.0 - sum_p2);

    const double ge = g_func(eps);
    const double gv = g_func(ups_var);
    const double s_w = shannon_entropy_ext(w);
    const double s_pq = shannon_entropy_ext(pq);

    std::vector<BoundEntry> out;
    auto add = [&](const char* name, double v) { out.push_back({name, v, "average"}); };
    add("a-state-1.1", s_w + ge);
    add("a-state-1.1b", s_w + gv);
    add("a-state-1.2", upsilon_m * s_pq + ge);
    add("a-state-1.2b", upsilon_m * s_pq + gv);
    add("a-state-1.3", ups_var * log_n(e) + ge);
    add("a-state-1.3b", ups_var * log_n(e) + gv);
    add("a-state-2.1", eps * log_dim(e) + ge);
    add("a-state-2.2", ups_var * log_dim(e) + gv);
    return out;
}

std::vector<BoundEntry> single_state_bounds(const DiscreteEnsemble& e, std::size_t i0) {
    if (i0 >= e.size()) throw ValidationError("reference member index out of range");
    const DensityMatrix& ref = e.states[i0];
    const double p0 = e.probs[i0];

    double eps1 = 0.0, ups1 = 0.0;
    std::vector<double> w;  // p_i ||rho_i - rho_{i0}||_1 / (2 eps1), filled unnormalized
    w.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i == i0) continue;
        const double dist = trace_distance(e.states[i], ref);
        eps1 += e.probs[i] * dist;
        ups1 = std::max(ups1, dist);
        w.push_back(e.probs[i] * dist);
    }

    double weight_term = 0.0;
    if (eps1 > 0.0) {
        for (double& x : w) x /= eps1;  // now sums to 1
        weight_term = eps1 * shannon_entropy_ext(w);
    }

    const double ge = g_func(eps1);
    const double q0 = 1.0 - p0;
    const std::string tag = "state-" + std::to_string(i0);

    std::vector<BoundEntry> out;
    auto add = [&](const char* name, double v) { out.push_back({name, v, tag}); };
    add("1-state-1.1", weight_term + ge);
    // The bracketed correction can be negative; emitted as-is.
    add("1-state-1.2",
        ups1 * shannon_entropy_ext(e.probs) + g_func(q0 * ups1) - ups1 * binary_entropy(q0));
    add("1-state-2.1", eps1 * log_dim(e) + ge);
    add("1-state-2.2", q0 * ups1 * log_dim(e) + g_func(q0 * ups1));
    return out;
}

std::vector<BoundEntry> divergence_bounds(const DiscreteEnsemble& e, double eps_av,
                                          double eps_m) {
    if (eps_av < 0.0 || eps_m < 0.0) throw ValidationError("metric divergences must be >= 0");
    const double ga = g_func(eps_av);
    std::vector<BoundEntry> out;
    out.push_back({"amd-ub-n", eps_av * log_n(e) + ga, "amd-opt"});
    out.push_back({"amd-ub-d", eps_av * log_dim(e) + ga, "amd-opt"});
    out.push_back({"mmd-ub", eps_m * shannon_entropy_ext(e.probs) + g_func(eps_m), "mmd-opt"});
    return out;
}

BoundReport full_report(const DiscreteEnsemble& e, const SolverConfig& cfg) {
    BoundReport rep;
    rep.chi_exact = holevo_chi(e);

    const AudenaertBounds au = audenaert_bounds(e);
    rep.entries.push_back({"A-ub", au.via_entropy, "-"});
    rep.entries.push_back({"A-ub+", au.via_log_n, "-"});

    auto run_solver = [](auto&& call) {
        try {
            return call();
        } catch (const SolverError& err) {
            return err.best();  // any feasible state still yields valid bounds
        }
    };
    const DivergenceSolution amd = run_solver([&] { return amd_optimal(e, cfg); });
    const DivergenceSolution mmd = run_solver([&] { return mmd_optimal(e.states, cfg); });

    struct Ref {
        const char* tag;
        DensityMatrix state;
    };
    const Ref refs[] = {{"chaotic", chaotic_state(e.dim())},
                        {"average", average_state(e)},
                        {"amd-opt", amd.optimal_state},
                        {"mmd-opt", mmd.optimal_state}};
    for (const auto& r : refs) {
        const Prop1Bounds p1 = prop1_bounds(e, r.state);
        rep.entries.push_back({"m-ub", p1.via_plus_chi, r.tag});
        rep.entries.push_back({"m-ub-1", p1.via_weight_entropy, r.tag});
        rep.entries.push_back({"m-ub-2", p1.via_positive_part, r.tag});
        const Corollary1Bounds c1 = corollary1_bounds(e, r.state);
        rep.entries.push_back({"ec-ub.1", c1.via_sup_entropy, r.tag});
        rep.entries.push_back({"ec-ub.2", c1.via_log_n, r.tag});
        rep.entries.push_back({"ec-ub.3", c1.via_log_dim, r.tag});
    }

    for (auto& entry : avg_state_bounds(e)) rep.entries.push_back(std::move(entry));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (auto& entry : single_state_bounds(e, i)) rep.entries.push_back(std::move(entry));
    for (auto& entry : divergence_bounds(e, amd.value, mmd.value))
        rep.entries.push_back(std::move(entry));
    return rep;
}

}  // namespace holevo
