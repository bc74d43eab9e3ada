#include "ppr/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ppr {

#if defined(PPR_HAVE_AVX2)
const Kernels* avx2_kernels_impl();
#endif
#if defined(PPR_HAVE_NEON)
const Kernels* neon_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#if defined(PPR_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return avx2_kernels_impl();
#endif
    return nullptr;
}

const Kernels* neon_kernels() {
#if defined(PPR_HAVE_NEON)
    return neon_kernels_impl(); // NEON is baseline on aarch64
#else
    return nullptr;
#endif
}

const Kernels& active_kernels() {
    static const Kernels* chosen = [] {
        if (const char* req = std::getenv("PPR_KERNELS")) {
            if (std::strcmp(req, "scalar") == 0) return &scalar_kernels();
            if (std::strcmp(req, "avx2") == 0 && avx2_kernels()) return avx2_kernels();
            if (std::strcmp(req, "neon") == 0 && neon_kernels()) return neon_kernels();
            return &scalar_kernels();
        }
        if (const Kernels* k = avx2_kernels()) return k;
        if (const Kernels* k = neon_kernels()) return k;
        return &scalar_kernels();
    }();
    return *chosen;
}

} // namespace ppr
