#include "holevo/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_detail.hpp"

namespace holevo::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* select() {
    const Ops* vec = nullptr;
    if (detail::avx2_ops() && cpu_has_avx2_fma()) vec = detail::avx2_ops();
    if (detail::neon_ops()) vec = detail::neon_ops();

    const char* env = std::getenv("HOLEVO_KERNELS");
    if (env && *env) {
        if (std::strcmp(env, "scalar") == 0) return &scalar();
        if (std::strcmp(env, "avx2") == 0 && detail::avx2_ops() && cpu_has_avx2_fma())
            return detail::avx2_ops();
        if (std::strcmp(env, "neon") == 0 && detail::neon_ops())
            return detail::neon_ops();
        // Unknown or unsupported request falls through to auto selection.
    }
    return vec ? vec : &scalar();
}

}  // namespace

const Ops& active() {
    static const Ops* chosen = select();
    return *chosen;
}

const Ops* avx2() {
    return (detail::avx2_ops() && cpu_has_avx2_fma()) ? detail::avx2_ops() : nullptr;
}

const Ops* neon() { return detail::neon_ops(); }

}  // namespace holevo::kernels
