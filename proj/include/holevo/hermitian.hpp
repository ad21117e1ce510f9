#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace holevo {

using cplx = std::complex<double>;

// Numerical tolerances shared across the library.
namespace tol {
inline constexpr double hermiticity = 1e-10;   // max |a_ij - conj(a_ji)|, relative to scale
inline constexpr double psd_floor = -1e-9;     // eigenvalues below this reject the matrix
inline constexpr double trace_one = 1e-9;      // |tr - 1| allowed for density matrices
inline constexpr double support = 1e-12;       // eigenvalues below this count as kernel
inline constexpr double jacobi_off = 1e-13;    // off-diagonal Frobenius target, relative
inline constexpr double zero_norm = 1e-12;     // trace norms below this count as zero
}  // namespace tol

// Dense row-major complex matrix.  Also used with rows acting as vectors
// (eigenbases, kets) so that the hot loops touch contiguous memory.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<cplx> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    cplx& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    cplx* row(std::size_t r) { return a.data() + r * cols; }
    const cplx* row(std::size_t r) const { return a.data() + r * cols; }

    static Matrix identity(std::size_t n);
};

class HermitianMatrix {
  public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t d) : dim_(d), a_(d * d) {}

    // Validates approximate hermiticity and symmetrizes exactly.
    // Throws ValidationError when entries are further than
    // tol::hermiticity * max(1, max|entry|) from conjugate symmetry.
    static HermitianMatrix checked(const Matrix& m);

    static HermitianMatrix identity(std::size_t d);

    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
    cplx* row(std::size_t r) { return a_.data() + r * dim_; }
    const cplx* row(std::size_t r) const { return a_.data() + r * dim_; }
    const std::vector<cplx>& raw() const { return a_; }
    std::vector<cplx>& raw() { return a_; }

    double trace() const;
    double frobenius() const;
    double max_abs() const;

    HermitianMatrix& operator+=(const HermitianMatrix& o);
    HermitianMatrix& operator-=(const HermitianMatrix& o);
    HermitianMatrix& operator*=(double f);

    friend HermitianMatrix operator+(HermitianMatrix x, const HermitianMatrix& y) { return x += y; }
    friend HermitianMatrix operator-(HermitianMatrix x, const HermitianMatrix& y) { return x -= y; }
    friend HermitianMatrix operator*(double f, HermitianMatrix x) { return x *= f; }

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

// Eigenvalues in descending order; basis row k holds eigenvector k
// (contiguous, orthonormal).
struct SpectralDecomposition {
    std::vector<double> values;
    Matrix basis;

    HermitianMatrix reconstruct() const;
    // Rebuilds with the supplied eigenvalues instead (same basis); used for
    // spectral projections and matrix functions.
    HermitianMatrix reconstruct_with(const std::vector<double>& vals) const;
};

// Cyclic-by-rows complex Jacobi.  Stops when the off-diagonal Frobenius
// mass drops below tol::jacobi_off relative to the matrix scale.
SpectralDecomposition eig_hermitian(const HermitianMatrix& h);

double trace_norm(const HermitianMatrix& h);

struct JordanParts {
    HermitianMatrix pos, neg;  // both PSD, h = pos - neg
};
JordanParts jordan_decomposition(const HermitianMatrix& h);

class DensityMatrix {
  public:
    DensityMatrix() = default;

    // Full validation: hermiticity, unit trace within tol::trace_one,
    // eigenvalues >= tol::psd_floor.  Small negative eigenvalues are
    // clipped to zero and the spectrum renormalized.
    static DensityMatrix validated(const HermitianMatrix& h);

    // For operators that are positive and unit trace by construction
    // (convex mixtures, spectral reconstructions).  No checks.
    static DensityMatrix trusted(HermitianMatrix h);

    static DensityMatrix mixture(const std::vector<double>& w,
                                 const std::vector<DensityMatrix>& states);

    const HermitianMatrix& mat() const { return m_; }
    std::size_t dim() const { return m_.dim(); }

  private:
    explicit DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {}
    HermitianMatrix m_;
};

// Normalizes the ket and forms the projector.  Throws ValidationError on a
// (near-)zero vector.
DensityMatrix make_pure_state(const std::vector<cplx>& ket);

// The maximally mixed state I/d.
DensityMatrix chaotic_state(std::size_t d);

// (1/2) * trace_norm(a - b).
double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace holevo
