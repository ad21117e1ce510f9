#include "holevo/entropy.hpp"

#include <cmath>
#include <sstream>

#include "holevo/errors.hpp"
#include "holevo/kernels.hpp"

namespace holevo {

double ExtendedReal::value() const {
    if (!finite_) throw NumericError("attempted to read an infinite ExtendedReal");
    return v_;
}

double eta(double x) {
    if (x < 0.0) {
        // Tiny negatives from rounding are treated as zero.
        if (x > -1e-14) return 0.0;
        std::ostringstream os;
        os << "eta is undefined for negative argument " << x;
        throw ValidationError(os.str());
    }
    if (x == 0.0) return 0.0;
    return -x * std::log(x);
}

double binary_entropy(double p) {
    if (p < -1e-14 || p > 1.0 + 1e-14) {
        std::ostringstream os;
        os << "binary entropy argument " << p << " outside [0,1]";
        throw ValidationError(os.str());
    }
    p = std::min(std::max(p, 0.0), 1.0);
    return eta(p) + eta(1.0 - p);
}

double g_func(double e) {
    if (e < 0.0) {
        if (e > -1e-14) return 0.0;
        std::ostringstream os;
        os << "g is undefined for negative argument " << e;
        throw ValidationError(os.str());
    }
    if (e == 0.0) return 0.0;
    return (1.0 + e) * std::log1p(e) - e * std::log(e);
}

double shannon_entropy_ext(const std::vector<double>& w) {
    double total = 0.0, s = 0.0;
    for (double x : w) {
        s += eta(x);
        total += std::max(x, 0.0);
    }
    return s - eta(total);
}

double von_neumann_entropy_ext(const HermitianMatrix& a) {
    const double floor = tol::psd_floor * std::max(1.0, a.max_abs());
    auto eig = eig_hermitian(a);
    double total = 0.0, s = 0.0;
    for (double v : eig.values) {
        if (v < floor) {
            std::ostringstream os;
            os << "operator is not positive: eigenvalue " << v;
            throw ValidationError(os.str());
        }
        if (v <= 0.0) continue;
        s += eta(v);
        total += v;
    }
    return s - eta(total);
}

ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw ValidationError("relative entropy needs equal dimensions");
    const std::size_t d = rho.dim();
    auto er = eig_hermitian(rho.mat());
    auto es = eig_hermitian(sigma.mat());

    // Overlap magnitudes: |<v_i|w_j>|^2 for eigenvectors v of rho, w of sigma.
    Matrix m(d, d);
    kernels::active().cmatmul_nh(d, d, d, er.basis.a.data(), es.basis.a.data(), m.a.data());

    double tr_rho_log_rho = 0.0;
    for (double v : er.values)
        if (v > tol::support) tr_rho_log_rho += v * std::log(v);

    // Mass of rho's support landing in sigma's kernel.  Genuine containment
    // leaves only squared rounding noise here, far below the threshold.
    double kernel_mass = 0.0;
    double tr_rho_log_sigma = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double li = er.values[i];
        if (li <= tol::support) continue;
        for (std::size_t j = 0; j < d; ++j) {
            const double overlap = std::norm(m(i, j));
            if (es.values[j] <= tol::support) {
                kernel_mass += li * overlap;
            } else {
                tr_rho_log_sigma += li * overlap * std::log(es.values[j]);
            }
        }
    }
    if (kernel_mass > 1e-10) return ExtendedReal::infinity();
    return ExtendedReal::finite(tr_rho_log_rho - tr_rho_log_sigma);
}

}  // namespace holevo
