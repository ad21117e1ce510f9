#include "holevo/kernels.hpp"

#include "kernels_detail.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#define HOLEVO_AVX2 __attribute__((target("avx2,fma")))

namespace holevo::kernels {
namespace {

// One __m256d holds two complex doubles as (re0, im0, re1, im1).

// u * v for packed complex pairs.
HOLEVO_AVX2 inline __m256d cmul(__m256d u, __m256d v) {
    __m256d ure = _mm256_movedup_pd(u);
    __m256d uim = _mm256_permute_pd(u, 0xF);
    __m256d vsw = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(ure, v, _mm256_mul_pd(uim, vsw));
}

// Flips the sign of the imaginary lanes.
HOLEVO_AVX2 inline __m256d conj_v(__m256d u) {
    const __m256d mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    return _mm256_xor_pd(u, mask);
}

HOLEVO_AVX2 inline __m256d broadcast_c(cplx a) {
    return _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
}

HOLEVO_AVX2 void caxpy_v(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d av = broadcast_c(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        yv = _mm256_add_pd(yv, cmul(av, xv));
        _mm256_storeu_pd(yd + 2 * i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

HOLEVO_AVX2 void caxpy_conj_v(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d av = broadcast_c(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = conj_v(_mm256_loadu_pd(xd + 2 * i));
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        yv = _mm256_add_pd(yv, cmul(av, xv));
        _mm256_storeu_pd(yd + 2 * i, yv);
    }
    for (; i < n; ++i) y[i] += a * std::conj(x[i]);
}

HOLEVO_AVX2 cplx cdotc_v(std::size_t n, const cplx* x, const cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = conj_v(_mm256_loadu_pd(xd + 2 * i));
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        acc = _mm256_add_pd(acc, cmul(xv, yv));
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d sum = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, sum);
    cplx r{out[0], out[1]};
    for (; i < n; ++i) r += std::conj(x[i]) * y[i];
    return r;
}

HOLEVO_AVX2 void crot_v(std::size_t n, double c, cplx s, cplx* x, cplx* y) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = broadcast_c(s);
    const __m256d scv = broadcast_c(std::conj(s));
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d xn = _mm256_fmadd_pd(cv, xv, cmul(sv, yv));
        __m256d yn = _mm256_fmsub_pd(cv, yv, cmul(scv, xv));
        _mm256_storeu_pd(xd + 2 * i, xn);
        _mm256_storeu_pd(yd + 2 * i, yn);
    }
    const cplx sc = std::conj(s);
    for (; i < n; ++i) {
        const cplx xv = x[i], yv = y[i];
        x[i] = c * xv + s * yv;
        y[i] = c * yv - sc * xv;
    }
}

HOLEVO_AVX2 void cmatmul_nn_v(std::size_t m, std::size_t k, std::size_t n,
                              const cplx* A, const cplx* B, cplx* C) {
    for (std::size_t i = 0; i < m * n; ++i) C[i] = cplx{};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            caxpy_v(n, A[i * k + l], B + l * n, C + i * n);
        }
    }
}

HOLEVO_AVX2 void cmatmul_nh_v(std::size_t m, std::size_t k, std::size_t n,
                              const cplx* A, const cplx* B, cplx* C) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // A[i,:] . conj(B[j,:]) = conj( B[j,:]^dagger-dot A[i,:] )
            C[i * n + j] = std::conj(cdotc_v(k, A + i * k, B + j * k));
        }
    }
}

const Ops avx2_ops_table = {
    "avx2", caxpy_v, caxpy_conj_v, cdotc_v, crot_v, cmatmul_nn_v, cmatmul_nh_v,
};

}  // namespace

namespace detail {
const Ops* avx2_ops() { return &avx2_ops_table; }
}  // namespace detail

}  // namespace holevo::kernels

#else

namespace holevo::kernels::detail {
const Ops* avx2_ops() { return nullptr; }
}  // namespace holevo::kernels::detail

#endif
