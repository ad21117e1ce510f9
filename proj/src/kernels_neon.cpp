#include "holevo/kernels.hpp"

#include "kernels_detail.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace holevo::kernels {
namespace {

// One float64x2_t holds a single complex double as (re, im).

inline float64x2_t cmul(float64x2_t u, float64x2_t v) {
    // (ur*vr - ui*vi, ur*vi + ui*vr)
    float64x2_t re = vmulq_laneq_f64(v, u, 0);            // (ur*vr, ur*vi)
    float64x2_t vs = vextq_f64(v, v, 1);                  // (vi, vr)
    float64x2_t im = vmulq_laneq_f64(vs, u, 1);           // (ui*vi, ui*vr)
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(re, im, sign);
}

inline float64x2_t conj_v(float64x2_t u) {
    const float64x2_t sign = {1.0, -1.0};
    return vmulq_f64(u, sign);
}

void caxpy_v(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const float64x2_t av = {a.real(), a.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(xd + 2 * i);
        float64x2_t yv = vld1q_f64(yd + 2 * i);
        vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul(av, xv)));
    }
}

void caxpy_conj_v(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const float64x2_t av = {a.real(), a.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = conj_v(vld1q_f64(xd + 2 * i));
        float64x2_t yv = vld1q_f64(yd + 2 * i);
        vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul(av, xv)));
    }
}

cplx cdotc_v(std::size_t n, const cplx* x, const cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = conj_v(vld1q_f64(xd + 2 * i));
        float64x2_t yv = vld1q_f64(yd + 2 * i);
        acc = vaddq_f64(acc, cmul(xv, yv));
    }
    return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

void crot_v(std::size_t n, double c, cplx s, cplx* x, cplx* y) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const float64x2_t cv = vdupq_n_f64(c);
    const float64x2_t sv = {s.real(), s.imag()};
    const float64x2_t scv = {s.real(), -s.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(xd + 2 * i);
        float64x2_t yv = vld1q_f64(yd + 2 * i);
        float64x2_t xn = vfmaq_f64(cmul(sv, yv), cv, xv);
        float64x2_t yn = vfmsq_f64(cmul(scv, xv), cv, yv);
        // vfmsq computes a - b*c; we need c*y - conj(s)*x.
        yn = vnegq_f64(yn);
        vst1q_f64(xd + 2 * i, xn);
        vst1q_f64(yd + 2 * i, yn);
    }
}

void cmatmul_nn_v(std::size_t m, std::size_t k, std::size_t n,
                  const cplx* A, const cplx* B, cplx* C) {
    for (std::size_t i = 0; i < m * n; ++i) C[i] = cplx{};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            caxpy_v(n, A[i * k + l], B + l * n, C + i * n);
        }
    }
}

void cmatmul_nh_v(std::size_t m, std::size_t k, std::size_t n,
                  const cplx* A, const cplx* B, cplx* C) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            C[i * n + j] = std::conj(cdotc_v(k, A + i * k, B + j * k));
        }
    }
}

const Ops neon_ops_table = {
    "neon", caxpy_v, caxpy_conj_v, cdotc_v, crot_v, cmatmul_nn_v, cmatmul_nh_v,
};

}  // namespace

namespace detail {
const Ops* neon_ops() { return &neon_ops_table; }
}  // namespace detail

}  // namespace holevo::kernels

#else

namespace holevo::kernels::detail {
const Ops* neon_ops() { return nullptr; }
}  // namespace holevo::kernels::detail

#endif
