#include "holevo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"
#include "holevo/kernels.hpp"
#include "holevo/random_states.hpp"

namespace holevo {
namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("channel parameter p must lie in [0,1]");
}

Matrix scaled_identity(std::size_t d, double s) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = s;
    return m;
}

}  // namespace

std::size_t QuantumChannel::dim_in() const {
    if (kind == Kind::kraus) return kraus_ops.empty() ? 0 : kraus_ops[0].cols;
    return cq_outputs.size();
}

std::size_t QuantumChannel::dim_out() const {
    if (kind == Kind::kraus) return kraus_ops.empty() ? 0 : kraus_ops[0].rows;
    return cq_outputs.empty() ? 0 : cq_outputs[0].dim();
}

QuantumChannel QuantumChannel::from_kraus(std::vector<Matrix> ops) {
    if (ops.empty()) throw ValidationError("a channel needs at least one Kraus operator");
    const std::size_t db = ops[0].rows, da = ops[0].cols;
    if (da == 0 || db == 0) throw ValidationError("Kraus operators must be nonempty");
    for (const auto& k : ops)
        if (k.rows != db || k.cols != da)
            throw ValidationError("Kraus operators must share one shape");

    // sum_k K^dag K = I_A
    Matrix acc(da, da);
    for (const auto& k : ops)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                cplx s = 0.0;
                for (std::size_t l = 0; l < db; ++l) s += std::conj(k(l, i)) * k(l, j);
                acc(i, j) += s;
            }
    double worst = 0.0;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            worst = std::max(worst, std::abs(acc(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
    if (worst > 1e-9)
        throw ValidationError("Kraus set is not trace preserving (sum K^dag K != I)");

    QuantumChannel ch;
    ch.kind = Kind::kraus;
    ch.kraus_ops = std::move(ops);
    return ch;
}

QuantumChannel QuantumChannel::classical_quantum(std::vector<DensityMatrix> outputs) {
    if (outputs.empty()) throw ValidationError("cq channel needs at least one output state");
    const std::size_t db = outputs[0].dim();
    for (const auto& s : outputs)
        if (s.dim() != db) throw ValidationError("cq outputs must share one dimension");
    QuantumChannel ch;
    ch.kind = Kind::classical_quantum;
    ch.cq_outputs = std::move(outputs);
    ch.family = "cq";
    return ch;
}

DensityMatrix apply_channel(const QuantumChannel& phi, const DensityMatrix& rho) {
    if (rho.dim() != phi.dim_in()) throw ValidationError("input state dimension mismatch");

    if (phi.kind == QuantumChannel::Kind::classical_quantum) {
        std::vector<double> w(phi.cq_outputs.size());
        for (std::size_t k = 0; k < w.size(); ++k)
            w[k] = std::max(0.0, rho.mat()(k, k).real());
        return DensityMatrix::mixture(w, phi.cq_outputs);
    }

    const std::size_t da = phi.dim_in(), db = phi.dim_out();
    const auto& K = kernels::active();
    Matrix tmp(db, da), term(db, db), acc(db, db);
    for (const auto& k : phi.kraus_ops) {
        K.cmatmul_nn(db, da, da, k.a.data(), rho.mat().raw().data(), tmp.a.data());
        K.cmatmul_nh(db, da, db, tmp.a.data(), k.a.data(), term.a.data());
        K.caxpy(acc.a.size(), 1.0, term.a.data(), acc.a.data());
    }
    return DensityMatrix::validated(HermitianMatrix::checked(acc));
}

QuantumChannel make_depolarizing(std::size_t d, double p) {
    if (d < 2) throw ValidationError("depolarizing channel needs dimension >= 2");
    check_probability(p);

    // Weyl twirl: the d^2 shift/phase operators X^j Z^k average any state to
    // I/d, so {sqrt(1-p+p/d^2) I} u {sqrt(p)/d X^j Z^k} realizes
    // (1-p) rho + p I/d with the (0,0) operator folded into the identity.
    std::vector<Matrix> ops;
    ops.reserve(d * d);
    ops.push_back(scaled_identity(d, std::sqrt(1.0 - p + p / double(d * d))));
    const double w = 2.0 * std::numbers::pi / double(d);
    const double s = std::sqrt(p) / double(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            if (j == 0 && k == 0) continue;
            Matrix m(d, d);
            for (std::size_t col = 0; col < d; ++col)
                m((col + j) % d, col) = s * std::polar(1.0, w * double(k * col));
            ops.push_back(std::move(m));
        }
    QuantumChannel ch = QuantumChannel::from_kraus(std::move(ops));
    ch.family = "depolarizing";
    ch.p = p;
    return ch;
}

QuantumChannel make_erasure(std::size_t d, double p) {
    if (d < 1) throw ValidationError("erasure channel needs dimension >= 1");
    check_probability(p);
    std::vector<Matrix> ops;
    ops.reserve(d + 1);
    {
        Matrix keep(d + 1, d);
        for (std::size_t i = 0; i < d; ++i) keep(i, i) = std::sqrt(1.0 - p);
        ops.push_back(std::move(keep));
    }
    for (std::size_t i = 0; i < d; ++i) {
        Matrix flag(d + 1, d);
        flag(d, i) = std::sqrt(p);
        ops.push_back(std::move(flag));
    }
    QuantumChannel ch = QuantumChannel::from_kraus(std::move(ops));
    ch.family = "erasure";
    ch.p = p;
    return ch;
}

QuantumChannel make_mixing(const DensityMatrix& sigma, double p) {
    check_probability(p);
    const std::size_t d = sigma.dim();
    auto eig = eig_hermitian(sigma.mat());
    std::vector<Matrix> ops;
    ops.push_back(scaled_identity(d, std::sqrt(1.0 - p)));
    if (p > 0.0) {
        for (std::size_t j = 0; j < d; ++j) {
            if (eig.values[j] <= tol::support) continue;
            const double s = std::sqrt(p * eig.values[j]);
            for (std::size_t k = 0; k < d; ++k) {
                Matrix m(d, d);  // sqrt(p lambda_j) |psi_j><e_k|
                for (std::size_t r = 0; r < d; ++r) m(r, k) = s * eig.basis(j, r);
                ops.push_back(std::move(m));
            }
        }
    }
    QuantumChannel ch = QuantumChannel::from_kraus(std::move(ops));
    ch.family = "mixing";
    ch.p = p;
    return ch;
}

QuantumChannel make_cq(std::vector<DensityMatrix> outputs) {
    return QuantumChannel::classical_quantum(std::move(outputs));
}

QuantumChannel make_example_cq(const CqSpectrumCase& c) {
    const std::size_t d = c.d, r = c.r;
    std::vector<double> spectrum(d, 0.0);
    if (c.shape == CqSpectrumCase::Shape::shifted_uniform) {
        if (d < 2 || r + 1 >= d) throw ValidationError("shifted-uniform case needs r < d-1");
        spectrum[0] = 1.0 - double(r) / double(d);
        for (std::size_t i = 1; i <= r; ++i) spectrum[i] = 1.0 / double(d);
    } else {
        if (r < 1 || r > d) throw ValidationError("projector case needs 1 <= r <= d");
        for (std::size_t i = 0; i < r; ++i) spectrum[i] = 1.0 / double(r);
    }

    std::vector<DensityMatrix> outputs;
    outputs.reserve(d);
    for (std::size_t shift = 0; shift < d; ++shift) {
        HermitianMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) m((i + shift) % d, (i + shift) % d) = spectrum[i];
        outputs.push_back(DensityMatrix::trusted(std::move(m)));
    }
    QuantumChannel ch = QuantumChannel::classical_quantum(std::move(outputs));
    ch.family = c.shape == CqSpectrumCase::Shape::shifted_uniform ? "cq-shifted-uniform"
                                                                  : "cq-projector";
    ch.rank = r;
    return ch;
}

std::vector<DensityMatrix> default_probe_states(std::size_t dim, std::size_t random_count,
                                                std::uint64_t seed) {
    std::vector<DensityMatrix> probes;
    probes.reserve(dim + random_count);
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<cplx> ket(dim, 0.0);
        ket[k] = 1.0;
        probes.push_back(make_pure_state(ket));
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_count; ++k)
        probes.push_back(random_pure_state(dim, rng));
    return probes;
}

double output_chebyshev_radius(const QuantumChannel& phi,
                               const std::vector<DensityMatrix>& probes,
                               const SolverConfig& cfg) {
    if (probes.empty()) throw ValidationError("output radius needs at least one probe state");
    std::vector<DensityMatrix> images;
    images.reserve(probes.size());
    for (const auto& s : probes) images.push_back(apply_channel(phi, s));
    return chebyshev_radius(images, cfg);
}

std::optional<double> closed_form_output_radius(const QuantumChannel& phi) {
    const double d_in = static_cast<double>(phi.dim_in());
    const double d_out = static_cast<double>(phi.dim_out());
    if (phi.family == "depolarizing") return (1.0 - phi.p) * (1.0 - 1.0 / d_in);
    if (phi.family == "erasure") return (1.0 - phi.p) * (1.0 - 1.0 / d_in);
    if (phi.family == "cq-shifted-uniform")
        return 1.0 - double(phi.rank) / d_out - 1.0 / d_out;
    if (phi.family == "cq-projector") return 1.0 - double(phi.rank) / d_out;
    return std::nullopt;
}

std::optional<double> exact_capacity(const QuantumChannel& phi) {
    const double d = static_cast<double>(phi.dim_in());
    if (phi.family == "depolarizing") {
        const double c = 1.0 - 1.0 / d;
        const double pc = phi.p * c;
        return (1.0 - pc) * std::log(d) - binary_entropy(pc) - pc * std::log(c);
    }
    if (phi.family == "erasure") return (1.0 - phi.p) * std::log(d);
    const double db = static_cast<double>(phi.dim_out());
    if (phi.family == "cq-shifted-uniform") {
        const double top = 1.0 - double(phi.rank) / db;
        return top * std::log(db) - eta(top);
    }
    if (phi.family == "cq-projector")
        return std::log(db) - std::log(static_cast<double>(phi.rank));
    return std::nullopt;
}

double prop2_bound(double r_phi, std::size_t dim_b) {
    if (!(r_phi >= 0.0 && r_phi <= 1.0))
        throw ValidationError("output radius must lie in [0,1]");
    return r_phi * std::log(static_cast<double>(dim_b)) + g_func(r_phi);
}

CapacityBoundReport capacity_report(const QuantumChannel& phi, const SolverConfig& cfg,
                                    std::size_t random_probes, std::uint64_t probe_seed) {
    CapacityBoundReport rep;
    rep.family = phi.family.empty() ? "custom" : phi.family;
    if (auto r = closed_form_output_radius(phi)) {
        rep.r_phi = *r;
    } else {
        auto probes = default_probe_states(phi.dim_in(), random_probes, probe_seed);
        rep.r_phi = output_chebyshev_radius(phi, probes, cfg);
        rep.probe_count = probes.size();
    }
    rep.bound = prop2_bound(rep.r_phi, phi.dim_out());
    rep.exact = exact_capacity(phi);
    return rep;
}

CapacityBoundReport cq_capacity_bound_report(const QuantumChannel& phi,
                                             const CqSpectrumCase& c) {
    if (phi.kind != QuantumChannel::Kind::classical_quantum || phi.dim_out() != c.d ||
        phi.rank != c.r)
        throw ValidationError("channel does not match the stated spectrum case");
    CapacityBoundReport rep;
    rep.family = phi.family;
    rep.r_phi = *closed_form_output_radius(phi);
    rep.bound = prop2_bound(rep.r_phi, c.d);
    rep.exact = exact_capacity(phi);
    return rep;
}

}  // namespace holevo
