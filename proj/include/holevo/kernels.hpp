#pragma once

#include <complex>
#include <cstddef>

// Low-level complex vector/matrix kernels used by the eigensolver, the
// subgradient solvers and channel application.  A scalar reference
// implementation always exists; on x86 an AVX2+FMA variant is selected at
// runtime (NEON on aarch64).  Selection can be forced with the environment
// variable HOLEVO_KERNELS=scalar|avx2|neon|auto.

namespace holevo::kernels {

using cplx = std::complex<double>;

struct Ops {
    const char* name;

    // y[i] += a * x[i]
    void (*caxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);

    // y[i] += a * conj(x[i])
    void (*caxpy_conj)(std::size_t n, cplx a, const cplx* x, cplx* y);

    // sum_i conj(x[i]) * y[i]
    cplx (*cdotc)(std::size_t n, const cplx* x, const cplx* y);

    // Paired rotation with real c and complex s, c^2 + |s|^2 = 1:
    //   (x[i], y[i]) <- (c*x[i] + s*y[i], c*y[i] - conj(s)*x[i])
    void (*crot)(std::size_t n, double c, cplx s, cplx* x, cplx* y);

    // C = A * B.  A is m x k, B is k x n, C is m x n, all row major.
    // C is overwritten.
    void (*cmatmul_nn)(std::size_t m, std::size_t k, std::size_t n,
                       const cplx* A, const cplx* B, cplx* C);

    // C = A * B^dagger.  A is m x k, B is n x k, C is m x n, row major.
    // C is overwritten.
    void (*cmatmul_nh)(std::size_t m, std::size_t k, std::size_t n,
                       const cplx* A, const cplx* B, cplx* C);
};

// Reference implementation, always available.
const Ops& scalar();

// Implementation chosen at load time (env override, then CPU detection).
const Ops& active();

// Vector variants; null when the build or the host cannot run them.
const Ops* avx2();
const Ops* neon();

}  // namespace holevo::kernels
