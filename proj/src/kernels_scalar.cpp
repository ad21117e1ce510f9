#include "holevo/kernels.hpp"

namespace holevo::kernels {
namespace {

void caxpy_s(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void caxpy_conj_s(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * std::conj(x[i]);
}

cplx cdotc_s(std::size_t n, const cplx* x, const cplx* y) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void crot_s(std::size_t n, double c, cplx s, cplx* x, cplx* y) {
    const cplx sc = std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx xv = x[i], yv = y[i];
        x[i] = c * xv + s * yv;
        y[i] = c * yv - sc * xv;
    }
}

void cmatmul_nn_s(std::size_t m, std::size_t k, std::size_t n,
                  const cplx* A, const cplx* B, cplx* C) {
    for (std::size_t i = 0; i < m * n; ++i) C[i] = cplx{};
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = C + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const cplx a = A[i * k + l];
            const cplx* brow = B + l * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += a * brow[j];
        }
    }
}

void cmatmul_nh_s(std::size_t m, std::size_t k, std::size_t n,
                  const cplx* A, const cplx* B, cplx* C) {
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = A + i * k;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx* brow = B + j * k;
            double re = 0.0, im = 0.0;
            for (std::size_t l = 0; l < k; ++l) {
                const double ar = arow[l].real(), ai = arow[l].imag();
                const double br = brow[l].real(), bi = brow[l].imag();
                // a * conj(b)
                re += ar * br + ai * bi;
                im += ai * br - ar * bi;
            }
            C[i * n + j] = {re, im};
        }
    }
}

const Ops scalar_ops = {
    "scalar", caxpy_s, caxpy_conj_s, cdotc_s, crot_s, cmatmul_nn_s, cmatmul_nh_s,
};

}  // namespace

const Ops& scalar() { return scalar_ops; }

}  // namespace holevo::kernels
