#include "holevo/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "holevo/errors.hpp"
#include "holevo/kernels.hpp"

namespace holevo {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

HermitianMatrix HermitianMatrix::checked(const Matrix& m) {
    if (m.rows != m.cols || m.rows == 0)
        throw ValidationError("hermitian matrix must be square and non-empty");
    double scale = 1.0;
    for (const cplx& v : m.a) scale = std::max(scale, std::abs(v));
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i; j < m.cols; ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    if (worst > tol::hermiticity * scale) {
        std::ostringstream os;
        os << "matrix is not hermitian: max |a_ij - conj(a_ji)| = " << worst;
        throw ValidationError(os.str());
    }
    HermitianMatrix h(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        h(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.cols; ++j) {
            cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

HermitianMatrix HermitianMatrix::identity(std::size_t d) {
    HermitianMatrix h(d);
    for (std::size_t i = 0; i < d; ++i) h(i, i) = 1.0;
    return h;
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i].real();
    return t;
}

double HermitianMatrix::frobenius() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double HermitianMatrix::max_abs() const {
    double s = 0.0;
    for (const cplx& v : a_) s = std::max(s, std::abs(v));
    return s;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double f) {
    for (cplx& v : a_) v *= f;
    return *this;
}

HermitianMatrix SpectralDecomposition::reconstruct() const { return reconstruct_with(values); }

HermitianMatrix SpectralDecomposition::reconstruct_with(const std::vector<double>& vals) const {
    const std::size_t d = basis.cols;
    const auto& K = kernels::active();
    HermitianMatrix out(d);
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (vals[k] == 0.0) continue;
        const cplx* v = basis.row(k);
        for (std::size_t i = 0; i < d; ++i) {
            // out[i][j] += val * v[i] * conj(v[j])
            K.caxpy_conj(d, vals[k] * v[i], v, out.row(i));
        }
    }
    // Exact hermiticity despite rounding in the accumulation.
    for (std::size_t i = 0; i < d; ++i) {
        out(i, i) = out(i, i).real();
        for (std::size_t j = i + 1; j < d; ++j) {
            cplx v = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

SpectralDecomposition eig_hermitian(const HermitianMatrix& h) {
    const std::size_t d = h.dim();
    if (d == 0) throw ValidationError("cannot diagonalize an empty matrix");
    const auto& K = kernels::active();

    std::vector<cplx> A = h.raw();
    // Symmetrize exactly so rounding in the caller cannot bias the sweep.
    for (std::size_t i = 0; i < d; ++i) {
        A[i * d + i] = A[i * d + i].real();
        for (std::size_t j = i + 1; j < d; ++j) {
            cplx v = 0.5 * (A[i * d + j] + std::conj(A[j * d + i]));
            A[i * d + j] = v;
            A[j * d + i] = std::conj(v);
        }
    }

    Matrix P = Matrix::identity(d);

    double scale = 0.0;
    for (const cplx& v : A) scale += std::norm(v);
    scale = std::max(1.0, std::sqrt(scale));
    const double target = tol::jacobi_off * scale;

    auto off_mass = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) s += std::norm(A[i * d + j]);
        return std::sqrt(2.0 * s);
    };

    const int max_sweeps = 60;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_mass() <= target) break;
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx apq = A[p * d + q];
                const double m = std::abs(apq);
                if (m <= target / (10.0 * d * d)) continue;
                const double app = A[p * d + p].real();
                const double aqq = A[q * d + q].real();
                const double tau = (aqq - app) / (2.0 * m);
                const double sgn = tau >= 0.0 ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(tau) + std::hypot(tau, 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sg = t * c;
                const cplx phase = apq / m;
                const cplx s = sg * phase;

                const double npp = c * c * app + sg * sg * aqq + 2.0 * c * sg * m;
                const double nqq = sg * sg * app + c * c * aqq - 2.0 * c * sg * m;

                K.crot(d, c, s, A.data() + p * d, A.data() + q * d);
                // Mirror the updated rows into the columns; the pivot block
                // comes from the closed form, keeping A exactly hermitian.
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == p || k == q) continue;
                    A[k * d + p] = std::conj(A[p * d + k]);
                    A[k * d + q] = std::conj(A[q * d + k]);
                }
                A[p * d + p] = npp;
                A[q * d + q] = nqq;
                A[p * d + q] = 0.0;
                A[q * d + p] = 0.0;

                K.crot(d, c, s, P.row(p), P.row(q));
            }
        }
    }
    if (sweep == max_sweeps && off_mass() > target)
        throw NumericError("jacobi eigensolver did not converge");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return A[x * d + x].real() > A[y * d + y].real();
    });

    SpectralDecomposition out;
    out.values.resize(d);
    out.basis = Matrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t src = order[k];
        out.values[k] = A[src * d + src].real();
        const cplx* prow = P.row(src);
        cplx* brow = out.basis.row(k);
        for (std::size_t i = 0; i < d; ++i) brow[i] = std::conj(prow[i]);
    }
    return out;
}

double trace_norm(const HermitianMatrix& h) {
    auto eig = eig_hermitian(h);
    double s = 0.0;
    for (double v : eig.values) s += std::abs(v);
    return s;
}

JordanParts jordan_decomposition(const HermitianMatrix& h) {
    auto eig = eig_hermitian(h);
    std::vector<double> pos(eig.values.size()), neg(eig.values.size());
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
        pos[i] = std::max(eig.values[i], 0.0);
        neg[i] = std::max(-eig.values[i], 0.0);
    }
    return {eig.reconstruct_with(pos), eig.reconstruct_with(neg)};
}

DensityMatrix DensityMatrix::validated(const HermitianMatrix& h) {
    const double tr = h.trace();
    if (std::abs(tr - 1.0) > tol::trace_one) {
        std::ostringstream os;
        os << "density matrix trace is " << tr << ", expected 1 within " << tol::trace_one;
        throw ValidationError(os.str());
    }
    auto eig = eig_hermitian(h);
    double clipped_sum = 0.0;
    for (double v : eig.values) {
        if (v < tol::psd_floor) {
            std::ostringstream os;
            os << "matrix is not positive semidefinite: eigenvalue " << v;
            throw ValidationError(os.str());
        }
        clipped_sum += std::max(v, 0.0);
    }
    if (clipped_sum <= 0.0) throw ValidationError("density matrix has no positive spectrum");
    std::vector<double> vals(eig.values.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        vals[i] = std::max(eig.values[i], 0.0) / clipped_sum;
    return DensityMatrix(eig.reconstruct_with(vals));
}

DensityMatrix DensityMatrix::trusted(HermitianMatrix h) { return DensityMatrix(std::move(h)); }

DensityMatrix DensityMatrix::mixture(const std::vector<double>& w,
                                     const std::vector<DensityMatrix>& states) {
    if (w.size() != states.size() || w.empty())
        throw ValidationError("mixture needs matching, non-empty weights and states");
    HermitianMatrix acc(states[0].dim());
    const auto& K = kernels::active();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (states[i].dim() != acc.dim())
            throw ValidationError("mixture states must share one dimension");
        K.caxpy(acc.raw().size(), w[i], states[i].mat().raw().data(), acc.raw().data());
    }
    return DensityMatrix(std::move(acc));
}

DensityMatrix make_pure_state(const std::vector<cplx>& ket) {
    if (ket.empty()) throw ValidationError("pure state ket is empty");
    double n2 = 0.0;
    for (const cplx& v : ket) n2 += std::norm(v);
    if (n2 < tol::zero_norm) throw ValidationError("pure state ket has (near-)zero norm");
    const double inv = 1.0 / n2;
    HermitianMatrix h(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < ket.size(); ++j)
            h(i, j) = ket[i] * std::conj(ket[j]) * inv;
    return DensityMatrix::trusted(std::move(h));
}

DensityMatrix chaotic_state(std::size_t d) {
    if (d == 0) throw ValidationError("dimension must be positive");
    HermitianMatrix h(d);
    for (std::size_t i = 0; i < d; ++i) h(i, i) = 1.0 / static_cast<double>(d);
    return DensityMatrix::trusted(std::move(h));
}

double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("trace distance needs equal dimensions");
    return 0.5 * trace_norm(a - b);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return trace_distance(a.mat(), b.mat());
}

}  // namespace holevo
