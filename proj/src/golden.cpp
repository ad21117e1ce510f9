#include "holevo/golden.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "holevo/bounds.hpp"
#include "holevo/channel.hpp"
#include "holevo/divergence_opt.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/entropy.hpp"
#include "holevo/hermitian.hpp"
#include "holevo/oscillator.hpp"

namespace holevo {
namespace {

class Suite {
  public:
    void group(std::string g) { group_ = std::move(g); }

    void eq(const std::string& name, double expected, double computed, double tol) {
        add(name, "=", expected, computed, tol, std::abs(computed - expected) <= tol);
    }
    void le(const std::string& name, double expected, double computed, double tol) {
        add(name, "<=", expected, computed, tol, computed <= expected + tol);
    }
    void ge(const std::string& name, double expected, double computed, double tol) {
        add(name, ">=", expected, computed, tol, computed >= expected - tol);
    }

    std::vector<GoldenCheck> take() { return std::move(checks_); }

  private:
    void add(const std::string& name, const char* rel, double expected, double computed,
             double tol, bool pass) {
        checks_.push_back({group_, name, rel, expected, computed, tol, pass});
    }

    std::string group_;
    std::vector<GoldenCheck> checks_;
};

DiscreteEnsemble basis_ensemble(std::size_t d, const std::vector<double>& probs) {
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        std::vector<cplx> ket(d, 0.0);
        ket[i] = 1.0;
        states.push_back(make_pure_state(ket));
    }
    return DiscreteEnsemble::checked(probs, std::move(states));
}

// A fixed nonorthogonal pure triple in dimension 3; every pure state sits
// at trace distance 1 - 1/d from the chaotic state, so the reference-state
// bounds at sigma = I/d collapse to closed forms.
void pure_states_chaotic_reference(Suite& s) {
    s.group("pure-vs-chaotic");
    const std::size_t d = 3;
    const double r2 = 1.0 / std::sqrt(2.0);
    std::vector<DensityMatrix> states = {
        make_pure_state({1.0, 0.0, 0.0}),
        make_pure_state({r2, r2, 0.0}),
        make_pure_state({0.0, r2, cplx(0.0, r2)}),
    };
    std::vector<double> probs = {0.5, 0.3, 0.2};
    auto e = DiscreteEnsemble::checked(probs, states);
    const auto sigma = chaotic_state(d);
    const double eps = 1.0 - 1.0 / static_cast<double>(d);

    s.eq("divergence from chaotic state = 1 - 1/d", eps, metric_divergence(e, sigma),
         1e-12);

    const auto p1 = prop1_bounds(e, sigma);
    s.eq("weight-entropy bound closed form", eps * shannon_entropy_ext(probs) + g_func(eps),
         p1.via_weight_entropy, 1e-12);
    const double h_avg = von_neumann_entropy_ext(average_state(e).mat());
    s.eq("positive-part bound closed form", eps * h_avg + g_func(eps),
         p1.via_positive_part, 1e-12);

    const auto der = derived_ensembles(e, sigma);
    double dev_plus = 0.0, dev_minus = 0.0;
    for (std::size_t i = 0; i < der.kept.size(); ++i) {
        dev_plus = std::max(dev_plus,
                            trace_distance(der.plus.states[i], states[der.kept[i]]));
        HermitianMatrix tilde = HermitianMatrix::identity(d);
        const auto& rho = states[der.kept[i]].mat();
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                tilde(r, c) = (tilde(r, c) - rho(r, c)) / static_cast<double>(d - 1);
        dev_minus = std::max(
            dev_minus, trace_distance(der.minus.states[i], DensityMatrix::trusted(tilde)));
    }
    s.le("plus parts recover the states", 0.0, dev_plus, 1e-10);
    s.le("minus parts are the orthogonal remainders", 0.0, dev_minus, 1e-10);

    const double gap = holevo_chi(e) - t_chi(e, sigma);
    s.ge("derived-difference never exceeds the exact quantity", 0.0, gap, 1e-10);
    s.le("defect bounded by h2(1/d)", binary_entropy(1.0 / static_cast<double>(d)), gap,
         1e-10);

    // With a uniform orthonormal ensemble the average is chaotic and the
    // defect saturates.
    auto eq = basis_ensemble(d, std::vector<double>(d, 1.0 / static_cast<double>(d)));
    s.eq("defect saturates when the average is chaotic",
         binary_entropy(1.0 / static_cast<double>(d)),
         holevo_chi(eq) - t_chi(eq, sigma), 1e-10);
}

// Uniform ensembles of normalized rank-k block projectors averaging to the
// chaotic state: the derived-difference defect equals h2((d-k)/d) exactly.
void projector_tightness(Suite& s) {
    s.group("block-projectors");
    const std::size_t cases[2][2] = {{4, 1}, {6, 2}};
    for (const auto& dk : cases) {
        const std::size_t d = dk[0], k = dk[1], n = d / k;
        std::vector<DensityMatrix> states;
        for (std::size_t b = 0; b < n; ++b) {
            HermitianMatrix pb(d);
            for (std::size_t j = 0; j < k; ++j)
                pb(b * k + j, b * k + j) = 1.0 / static_cast<double>(k);
            states.push_back(DensityMatrix::trusted(std::move(pb)));
        }
        auto e = DiscreteEnsemble::checked(
            std::vector<double>(n, 1.0 / static_cast<double>(n)), std::move(states));
        const auto sigma = chaotic_state(d);
        const std::string tag = " (d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")";

        const double dd = static_cast<double>(d), kk = static_cast<double>(k);
        s.eq("exact quantity log(d/k)" + tag, std::log(dd) - std::log(kk), holevo_chi(e),
             1e-12);
        s.eq("defect equals h2((d-k)/d)" + tag, binary_entropy((dd - kk) / dd),
             holevo_chi(e) - t_chi(e, sigma), 1e-9);

        const auto der = derived_ensembles(e, sigma);
        double dev_t = 0.0, dev_plus = 0.0;
        for (std::size_t i = 0; i < der.kept.size(); ++i) {
            dev_t = std::max(dev_t, std::abs(der.plus.probs[i] - e.probs[der.kept[i]]));
            dev_plus = std::max(dev_plus,
                                trace_distance(der.plus.states[i], e.states[der.kept[i]]));
        }
        s.le("derived weights reproduce the probabilities" + tag, 0.0, dev_t, 1e-12);
        s.le("plus parts recover the states" + tag, 0.0, dev_plus, 1e-10);
    }
}

// One likely state plus n rare orthogonal alternatives: chi has the closed
// form delta*log(n) + h2(delta) and the variance-weighted average-state
// bound collapses to a scalar expression.
void near_deterministic_orthogonal(Suite& s) {
    s.group("rare-alternatives");
    const std::size_t n = 4;
    const double delta = 0.2;
    std::vector<double> probs = {1.0 - delta};
    probs.insert(probs.end(), n, delta / static_cast<double>(n));
    auto e = basis_ensemble(n + 1, probs);

    const double nn = static_cast<double>(n);
    s.eq("exact quantity delta*log(n) + h2(delta)",
         delta * std::log(nn) + binary_entropy(delta), holevo_chi(e), 1e-12);

    double sum_sq = 0.0;
    for (double p : probs) sum_sq += p * p;
    const double v = 1.0 - sum_sq;  // upsilon_m = 1 for orthogonal states
    double bound = 0.0;
    for (const auto& entry : avg_state_bounds(e))
        if (entry.name == "a-state-1.3b") bound = entry.value;
    s.eq("variance-weighted bound collapses to v*log(members) + g(v)",
         v * std::log(nn + 1.0) + g_func(v), bound, 1e-12);

    double h_terms = 0.0;
    for (double p : probs) h_terms += p * binary_entropy(p);
    s.eq("orthogonal defect equals sum of p*h2(p)", h_terms,
         holevo_chi(e) - t_chi(e, average_state(e)), 1e-9);
}

// The planar trine plus an orthogonal fourth state, uniform probabilities:
// average divergence 21/32, solved AMD 5/8 and MMD 2/3 with known optimal
// states.
void trine_divergences(Suite& s) {
    s.group("trine-plus-orthogonal");
    const double h = 0.5, q = std::sqrt(3.0) / 2.0;
    std::vector<DensityMatrix> states = {
        make_pure_state({1.0, 0.0, 0.0}),
        make_pure_state({-h, q, 0.0}),
        make_pure_state({-h, -q, 0.0}),
        make_pure_state({0.0, 0.0, 1.0}),
    };
    auto e = DiscreteEnsemble::checked(std::vector<double>(4, 0.25), states);

    s.eq("divergence at the average state", 21.0 / 32.0,
         metric_divergence(e, average_state(e)), 1e-10);

    SolverConfig cfg;
    cfg.tolerance = 1e-8;
    cfg.restarts = 2;
    cfg.seed = 424242;
    const auto amd = amd_optimal(e, cfg);
    s.eq("minimal average divergence", 5.0 / 8.0, amd.value, 1e-6);
    HermitianMatrix plane(3);
    plane(0, 0) = 0.5;
    plane(1, 1) = 0.5;
    s.le("average-optimal state is the plane projector", 0.0,
         trace_distance(amd.optimal_state, DensityMatrix::trusted(plane)), 1e-4);

    const auto mmd = mmd_optimal(e.states, cfg);
    s.eq("minimal worst-case divergence", 2.0 / 3.0, mmd.value, 1e-6);
    s.le("worst-case-optimal state is chaotic", 0.0,
         trace_distance(mmd.optimal_state, chaotic_state(3)), 1e-4);
}

// n pure states sqrt(1-a^2)|0> + a|i> with uniform probabilities: all
// pairwise distances, the distances to |0><0| and chi itself are closed
// forms in (n, a).
void overlap_family(Suite& s) {
    s.group("uniform-overlap-family");
    const struct {
        std::size_t n;
        double a;
    } cases[] = {{4, 0.3}, {9, 0.1}};
    for (const auto& c : cases) {
        const double a = c.a, nn = static_cast<double>(c.n);
        const double root = std::sqrt(1.0 - a * a);
        std::vector<DensityMatrix> states;
        for (std::size_t i = 1; i <= c.n; ++i) {
            std::vector<cplx> ket(c.n + 1, 0.0);
            ket[0] = root;
            ket[i] = a;
            states.push_back(make_pure_state(ket));
        }
        auto e = DiscreteEnsemble::checked(
            std::vector<double>(c.n, 1.0 / nn), states);
        const std::string tag =
            " (n=" + std::to_string(c.n) + ", a=" + std::to_string(a).substr(0, 3) + ")";

        const double beta = (1.0 - 1.0 / nn) * a * a;
        s.eq("exact quantity closed form" + tag,
             beta * std::log(nn - 1.0) + binary_entropy(beta), holevo_chi(e), 1e-9);

        double pair_min = 2.0, pair_max = 0.0;
        for (std::size_t i = 0; i < c.n; ++i)
            for (std::size_t j = i + 1; j < c.n; ++j) {
                const double t = trace_distance(states[i], states[j]);
                pair_min = std::min(pair_min, t);
                pair_max = std::max(pair_max, t);
            }
        const double pair_expect = a * std::sqrt(2.0 - a * a);
        s.eq("largest pairwise distance" + tag, pair_expect, pair_max, 1e-10);
        s.eq("smallest pairwise distance" + tag, pair_expect, pair_min, 1e-10);

        std::vector<cplx> anchor(c.n + 1, 0.0);
        anchor[0] = 1.0;
        const auto p0 = make_pure_state(anchor);
        double anchor_min = 2.0, anchor_max = 0.0;
        for (const auto& st : states) {
            const double t = trace_distance(st, p0);
            anchor_min = std::min(anchor_min, t);
            anchor_max = std::max(anchor_max, t);
        }
        s.eq("largest distance to the anchor state" + tag, a, anchor_max, 1e-10);
        s.eq("smallest distance to the anchor state" + tag, a, anchor_min, 1e-10);

        s.eq("half maximal pairwise distance" + tag, pair_expect,
             audenaert_bounds(e).upsilon_m, 1e-10);

        SolverConfig cfg;
        cfg.tolerance = 1e-7;
        cfg.restarts = 1;
        cfg.seed = 424242;
        s.le("worst-case radius at most a" + tag, a, chebyshev_radius(e.states, cfg),
             1e-6);
    }
}

void identity_channel(Suite& s) {
    s.group("identity-channel");
    const std::size_t d = 4;
    auto phi = make_depolarizing(d, 0.0);
    const double dd = static_cast<double>(d);
    s.eq("output radius 1 - 1/d", 1.0 - 1.0 / dd, *closed_form_output_radius(phi), 1e-12);
    s.eq("capacity log d", std::log(dd), *exact_capacity(phi), 1e-12);
    s.ge("radius bound dominates the capacity", std::log(dd),
         prop2_bound(1.0 - 1.0 / dd, d), 1e-12);
}

void depolarizing_erasure(Suite& s) {
    s.group("depolarizing-erasure");
    {
        const std::size_t d = 3;
        const double p = 0.5, dd = 3.0;
        auto rep = capacity_report(make_depolarizing(d, p), SolverConfig{});
        const double c = 1.0 - 1.0 / dd, pc = p * c;
        s.eq("depolarizing capacity closed form (d=3, p=0.5)",
             std::log(dd) - binary_entropy(pc) - pc * std::log(dd - 1.0), *rep.exact,
             1e-12);
        s.eq("depolarizing output radius (1-p)(1-1/d)", (1.0 - p) * c, rep.r_phi, 1e-12);
        s.ge("radius bound dominates exact capacity", *rep.exact, rep.bound, 1e-12);
        s.eq("radius bound regrouped display form",
             (1.0 - pc) * std::log(dd) - std::log(dd) / dd + g_func((1.0 - p) * c),
             rep.bound, 1e-12);
    }
    {
        double prev = 0.0;
        bool first = true;
        for (std::size_t d : {std::size_t{8}, std::size_t{16}, std::size_t{32}}) {
            auto rep = capacity_report(make_depolarizing(d, 0.5), SolverConfig{});
            const double rel = (rep.bound - *rep.exact) / *rep.exact;
            if (!first)
                s.le("relative gap shrinks with dimension (d=" + std::to_string(d) + ")",
                     prev, rel, 1e-12);
            prev = rel;
            first = false;
        }
    }
    {
        const std::size_t d = 3;
        const double p = 0.25, dd = 3.0;
        auto rep = capacity_report(make_erasure(d, p), SolverConfig{});
        s.eq("erasure capacity (1-p) log d", (1.0 - p) * std::log(dd), *rep.exact, 1e-12);
        s.eq("erasure output radius (1-p)(1-1/d)", (1.0 - p) * (1.0 - 1.0 / dd), rep.r_phi,
             1e-12);
        s.ge("radius bound dominates exact capacity", *rep.exact, rep.bound, 1e-12);
    }
}

void cq_spectra(Suite& s) {
    s.group("cq-spectra");
    const std::size_t d = 16, r = 4;
    const double dd = 16.0, rr = 4.0;

    CqSpectrumCase shifted{CqSpectrumCase::Shape::shifted_uniform, d, r};
    auto rep_s = cq_capacity_bound_report(make_example_cq(shifted), shifted);
    s.eq("shifted-uniform capacity closed form",
         (1.0 - rr / dd) * std::log(dd) + (1.0 - rr / dd) * std::log(1.0 - rr / dd),
         *rep_s.exact, 1e-12);
    s.eq("shifted-uniform output radius", 1.0 - rr / dd - 1.0 / dd, rep_s.r_phi, 1e-12);
    s.ge("shifted-uniform bound dominates", *rep_s.exact, rep_s.bound, 1e-12);

    CqSpectrumCase proj{CqSpectrumCase::Shape::projector, d, r};
    auto rep_p = cq_capacity_bound_report(make_example_cq(proj), proj);
    s.eq("projector capacity log(d/r)", std::log(dd / rr), *rep_p.exact, 1e-12);
    s.eq("projector output radius", 1.0 - rr / dd, rep_p.r_phi, 1e-12);
    s.ge("projector bound dominates", *rep_p.exact, rep_p.bound, 1e-12);

    const double rel_s = (rep_s.bound - *rep_s.exact) / *rep_s.exact;
    const double rel_p = (rep_p.bound - *rep_p.exact) / *rep_p.exact;
    s.ge("projector case is the rougher regime", rel_s, rel_p, 1e-12);
}

void mixing_channel(Suite& s) {
    s.group("mixing-channel");
    {
        const double p = 0.3;
        auto sigma = chaotic_state(4);
        auto phi = make_mixing(sigma, p);
        auto rho = make_pure_state({0.6, 0.0, cplx(0.0, 0.8), 0.0});
        s.eq("output contraction toward the mixing state",
             (1.0 - p) * trace_distance(rho, sigma),
             trace_distance(apply_channel(phi, rho), sigma), 1e-12);
    }
    const auto spec = OscillatorSpec::checked(1, {1.0});
    const double e_sigma = oscillator_ground_energy(spec);
    for (double en : {1e2, 1e4}) {
        for (double p : {0.1, 0.5, 0.9}) {
            const double e_star = (1.0 - p) * en + p * e_sigma;
            const double bound = prop4_capacity_bound(spec, 1.0 - p, e_star, e_sigma);
            const double lower =
                (1.0 - p) * gibbs_entropy(spec, en).entropy - binary_entropy(p);
            s.ge("capacity bound above the mixing lower bound (p=" +
                     std::to_string(p).substr(0, 3) + ", E=" +
                     std::to_string(std::lround(en)) + ")",
                 lower, bound, 1e-9);
        }
    }
}

void max_entropy_majorant(Suite& s) {
    s.group("max-entropy-majorant");
    const auto spec = OscillatorSpec::checked(1, {1.0});
    s.eq("thermal entropy at mean occupation 1", 2.0 * std::log(2.0),
         gibbs_entropy(spec, 1.5).entropy, 1e-10);
    for (double en : {10.0, 1e3, 1e5}) {
        s.ge("majorant dominates the thermal entropy (E=" +
                 std::to_string(std::lround(en)) + ")",
             gibbs_entropy(spec, en).entropy, hat_F(spec, en), 1e-12);
    }
    s.le("majorant slack below 0.05 at E=1e5", 0.05,
         hat_F(spec, 1e5) - gibbs_entropy(spec, 1e5).entropy, 0.0);
}

void scalar_minimization(Suite& s) {
    s.group("scalar-minimization");
    double prev = 0.0;
    bool first = true;
    for (double x : {1e2, 1e4, 1e6}) {
        const auto res = lemma1_minimize(x, 1.0, 0.0);
        const double ratio = res.value / x;
        const std::string expo = std::to_string(std::lround(std::log10(x)));
        s.ge("minimized value stays above the linear term (x=1e" + expo + ")", x,
             res.value, 0.0);
        if (!first)
            s.le("overhead ratio decreases (x=1e" + expo + ")", prev, ratio, 1e-12);
        prev = ratio;
        first = false;
    }
    s.le("overhead ratio within 5% at x=1e6", 1.05, prev, 0.0);
}

// Thermal witness: mix each Fock state toward the Gibbs state.  The
// resulting ensemble stays within divergence eps of the Gibbs state while
// its exact quantity keeps at least eps*F_H(E) - h2(eps).  Computed on a
// truncated Fock space with tail mass below 1e-10 (budgeted at 1e-6).
void thermal_witness(Suite& s) {
    s.group("thermal-witness");
    const auto spec = OscillatorSpec::checked(1, {1.0});
    const double en = 20.0, eps = 0.1;
    const double nbar = en - 0.5;
    const double q = nbar / (nbar + 1.0);
    const auto cut = static_cast<std::size_t>(std::ceil(std::log(1e-10) / std::log(q)));

    std::vector<double> therm(cut);
    double mass = 0.0;
    for (std::size_t k = 0; k < cut; ++k) {
        therm[k] = (1.0 - q) * std::pow(q, static_cast<double>(k));
        mass += therm[k];
    }
    for (double& w : therm) w /= mass;

    HermitianMatrix gm(cut);
    for (std::size_t k = 0; k < cut; ++k) gm(k, k) = therm[k];
    const auto gibbs = DensityMatrix::trusted(std::move(gm));
    const double h_gibbs = von_neumann_entropy_ext(gibbs.mat());

    double divergence = 0.0, mean_entropy = 0.0;
    for (std::size_t k = 0; k < cut; ++k) {
        HermitianMatrix mk(cut);
        for (std::size_t j = 0; j < cut; ++j) mk(j, j) = (1.0 - eps) * therm[j];
        mk(k, k) += eps;
        const auto member = DensityMatrix::trusted(std::move(mk));
        divergence += therm[k] * trace_distance(member, gibbs);
        mean_entropy += therm[k] * von_neumann_entropy_ext(member.mat());
    }
    // Members commute with their average (everything is Fock-diagonal), so
    // the entropy difference is the exact quantity.
    const double chi = h_gibbs - mean_entropy;

    s.le("ensemble stays within divergence eps of the Gibbs state", eps, divergence, 1e-6);
    s.ge("exact quantity above the witness floor",
         eps * gibbs_entropy(spec, en).entropy - binary_entropy(eps), chi, 1e-6);
}

}  // namespace

std::vector<GoldenCheck> run_golden_suite() {
    Suite s;
    pure_states_chaotic_reference(s);
    projector_tightness(s);
    near_deterministic_orthogonal(s);
    trine_divergences(s);
    overlap_family(s);
    identity_channel(s);
    depolarizing_erasure(s);
    cq_spectra(s);
    mixing_channel(s);
    max_entropy_majorant(s);
    scalar_minimization(s);
    thermal_witness(s);
    return s.take();
}

}  // namespace holevo
