#pragma once

#include <random>

#include "holevo/hermitian.hpp"

namespace holevo {

// Haar-uniform pure state (normalized complex Gaussian vector).
DensityMatrix random_pure_state(std::size_t dim, std::mt19937_64& rng);

// Full-rank random density matrix G G^dagger / tr(G G^dagger) with
// complex Gaussian G.
DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng);

}  // namespace holevo
