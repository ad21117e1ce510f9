#include "holevo/oscillator.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"

namespace holevo {
namespace {

// Geometric grid scan over (lo, hi] keeping the smallest-t minimizer on
// ties, then golden-section refinement of the winning bracket.
template <class F>
std::pair<double, double> minimize_1d(F&& f, double lo, double hi, int points = 400) {
    double best_t = hi, best_v = std::numeric_limits<double>::infinity();
    std::vector<double> ts(points);
    for (int k = 0; k < points; ++k) ts[k] = lo * std::pow(hi / lo, double(k) / (points - 1));
    ts.back() = hi;
    int best_k = points - 1;
    for (int k = 0; k < points; ++k) {
        const double v = f(ts[k]);
        if (v < best_v) {
            best_v = v;
            best_t = ts[k];
            best_k = k;
        }
    }

    double a = ts[best_k > 0 ? best_k - 1 : 0];
    double b = ts[best_k + 1 < points ? best_k + 1 : points - 1];
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(best_t)); ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    const double mid = 0.5 * (a + b), vm = f(mid);
    if (vm < best_v) {
        best_v = vm;
        best_t = mid;
    }
    return {best_t, best_v};
}

}  // namespace

OscillatorSpec OscillatorSpec::checked(std::size_t modes, std::vector<double> hbar_omega) {
    if (modes == 0 || hbar_omega.size() != modes)
        throw ValidationError("oscillator needs one positive frequency per mode");
    for (double w : hbar_omega)
        if (!(w > 0.0)) throw ValidationError("oscillator frequencies must be positive");
    return {modes, std::move(hbar_omega)};
}

double oscillator_ground_energy(const OscillatorSpec& spec) {
    double e0 = 0.0;
    for (double w : spec.hbar_omega) e0 += 0.5 * w;
    return e0;
}

double oscillator_energy_scale(const OscillatorSpec& spec) {
    double log_sum = 0.0;
    for (double w : spec.hbar_omega) log_sum += std::log(w);
    return std::exp(log_sum / double(spec.modes));
}

double hat_F(const OscillatorSpec& spec, double E) {
    if (E < 0.0) throw ValidationError("energy must be nonnegative");
    const double l = double(spec.modes);
    const double e0 = oscillator_ground_energy(spec);
    return l * std::log((E + e0) / (l * oscillator_energy_scale(spec))) + l;
}

GibbsResult gibbs_entropy(const OscillatorSpec& spec, double E) {
    const double e0 = oscillator_ground_energy(spec);
    if (!(E > e0)) throw ValidationError("mean energy must exceed the ground energy");

    auto energy_at = [&](double lam) {
        double e = 0.0;
        for (double w : spec.hbar_omega) e += w * (1.0 / std::expm1(lam * w) + 0.5);
        return e;
    };

    double lo = 1e-12 / E, hi = 1e3 / e0;
    for (int guard = 0; guard < 200 && energy_at(lo) < E; ++guard) lo *= 0.1;
    for (int guard = 0; guard < 200 && energy_at(hi) > E; ++guard) hi *= 10.0;

    // energy decreases in lambda: keep energy(lo) >= E >= energy(hi)
    for (int it = 0; it < 500 && (hi - lo) > 1e-12 * lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (energy_at(mid) >= E)
            lo = mid;
        else
            hi = mid;
    }
    const double lam = 0.5 * (lo + hi);

    GibbsResult out;
    out.lambda = lam;
    for (double w : spec.hbar_omega) {
        const double n = 1.0 / std::expm1(lam * w);
        out.entropy += (n + 1.0) * std::log1p(n) - n * std::log(n);
    }
    return out;
}

double prop3_bound(const EnergyBoundInput& in,
                   const std::function<double(double)>& majorant) {
    if (!(in.epsilon >= 0.0 && in.epsilon <= 1.0))
        throw ValidationError("metric divergence must lie in [0,1]");
    if (in.epsilon == 0.0) return 0.0;
    if (!(in.avg_energy > 0.0) || !(in.sigma_energy >= 0.0))
        throw ValidationError("energies must be positive");

    const double eps = in.epsilon, kap = in.kappa();
    const double a = 1.0 / (2.0 * eps);
    auto u = [&](double t) {
        const double grow = (1.0 + kap * t) / (1.0 - eps * t);
        return eps * (grow + t) * majorant(in.avg_energy / (eps * t)) +
               binary_entropy(eps * t) + g_func(eps * grow);
    };
    return minimize_1d(u, 1e-6 * a, a).second;
}

double corollary6_bound(const OscillatorSpec& spec, const EnergyBoundInput& in) {
    if (!(in.epsilon >= 0.0 && in.epsilon <= 1.0))
        throw ValidationError("metric divergence must lie in [0,1]");
    if (in.epsilon == 0.0) return 0.0;
    if (!(in.avg_energy > 0.0)) throw ValidationError("energies must be positive");

    const double eps = in.epsilon, kap = in.kappa();
    const double a = 1.0 / (2.0 * eps);
    const double f_top = hat_F(spec, in.avg_energy);
    const double l = double(spec.modes);
    auto u = [&](double t) {
        const double grow = (1.0 + kap * t) / (1.0 - eps * t);
        return eps * (grow + t) * (f_top - l * std::log(eps * t)) +
               binary_entropy(eps * t) + g_func(eps * grow);
    };
    return minimize_1d(u, 1e-6 * a, a).second;
}

Lemma1Result lemma1_minimize(double x, double b, double c) {
    if (!(b > 0.0)) throw ValidationError("log coefficient must be positive");
    auto u = [&](double t) {
        return ((1.0 + t) / (1.0 - t) + t) * (x - b * std::log(t) + c);
    };
    auto [t_star, value] = minimize_1d(u, 1e-9, 0.5 * (1.0 - 1e-12));
    return {t_star, value};
}

double prop4_capacity_bound(const OscillatorSpec& spec, double epsilon, double e_star,
                            double sigma_energy) {
    EnergyBoundInput in{epsilon, e_star, sigma_energy};
    return prop3_bound(in, [&](double E) { return hat_F(spec, E); });
}

}  // namespace holevo
