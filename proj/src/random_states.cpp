#include "holevo/random_states.hpp"

#include <vector>

#include "holevo/kernels.hpp"

namespace holevo {

DensityMatrix random_pure_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> ket(dim);
    for (auto& v : ket) v = cplx{gauss(rng), gauss(rng)};
    return make_pure_state(ket);
}

DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (auto& v : g.a) v = cplx{gauss(rng), gauss(rng)};
    HermitianMatrix h(dim);
    kernels::active().cmatmul_nh(dim, dim, dim, g.a.data(), g.a.data(), h.raw().data());
    const double tr = h.trace();
    h *= 1.0 / tr;
    // Symmetrize away accumulation noise.
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = h(i, i).real();
        for (std::size_t j = i + 1; j < dim; ++j) {
            cplx v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return DensityMatrix::trusted(std::move(h));
}

}  // namespace holevo
