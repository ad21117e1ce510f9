#pragma once

#include <vector>

#include "holevo/hermitian.hpp"

// Entropic quantities on the positive cones (not just normalized
// distributions / unit-trace operators), in natural log units.  For a
// nonnegative weight vector w the extended Shannon entropy is
//   S(w) = sum eta(w_i) - eta(sum w_i),   eta(x) = -x log x,
// and the extended von Neumann entropy of a positive operator is the same
// functional of its spectrum.  Both reduce to the usual definitions on
// normalized arguments and are positively homogeneous.

namespace holevo {

// Relative entropy can be +infinity on a support violation.  The tag keeps
// infinities out of ordinary arithmetic; only comparison and printing are
// supported downstream.
class ExtendedReal {
  public:
    static ExtendedReal finite(double v) { return ExtendedReal(true, v); }
    static ExtendedReal infinity() { return ExtendedReal(false, 0.0); }

    bool is_finite() const { return finite_; }
    double value() const;  // throws NumericError when infinite

    bool operator<(const ExtendedReal& o) const {
        if (!finite_) return false;
        if (!o.finite_) return true;
        return v_ < o.v_;
    }

  private:
    ExtendedReal(bool f, double v) : finite_(f), v_(v) {}
    bool finite_;
    double v_;
};

// eta(x) = -x log x, eta(0) = 0.  Negative input is rejected.
double eta(double x);

// Binary entropy h2(p) on [0,1].
double binary_entropy(double p);

// g(e) = (1+e) log(1+e) - e log e, g(0) = 0.  The continuity-bound overhead
// function; increasing and concave on [0, inf).
double g_func(double e);

// Extended Shannon entropy of a nonnegative weight vector (any total mass).
double shannon_entropy_ext(const std::vector<double>& w);

// Extended von Neumann entropy of a positive operator (any trace).
// Rejects matrices with eigenvalues below the PSD floor.
double von_neumann_entropy_ext(const HermitianMatrix& a);

// H(rho || sigma).  +infinity when supp(rho) is not contained in
// supp(sigma) (eigenvalues below tol::support count as kernel).
ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace holevo
