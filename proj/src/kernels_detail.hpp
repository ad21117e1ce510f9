#pragma once

#include "holevo/kernels.hpp"

namespace holevo::kernels::detail {

// Each returns the vector implementation compiled into this build, or null.
// Callers must still check CPU support before using the result.
const Ops* avx2_ops();
const Ops* neon_ops();

}  // namespace holevo::kernels::detail
