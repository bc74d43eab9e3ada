// NEON variants of the F_p row kernels (aarch64). Same Shoup reduction as the
// AVX2 path, four elements per iteration via paired 32x32->64 multiplies.

#include "ppr/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace ppr {
namespace {

inline std::uint64_t shoup_quotient(std::uint32_t c, std::uint32_t p) {
    return (std::uint64_t(c) << 32) / p;
}

// c*x mod p for a pair of x in 64-bit lanes (inputs widened from u32).
inline uint64x2_t mulmod2(uint32x2_t x, uint32x2_t c, uint32x2_t csh,
                          uint32x2_t pnarrow, uint64x2_t p2) {
    uint64x2_t prod = vmull_u32(x, c);
    uint64x2_t qhat = vshrq_n_u64(vmull_u32(x, csh), 32);
    uint64x2_t t = vsubq_u64(prod, vmull_u32(vmovn_u64(qhat), pnarrow));
    uint64x2_t ge = vcgeq_u64(t, p2);
    return vsubq_u64(t, vandq_u64(ge, p2));
}

void submul_neon(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t c, std::uint32_t p) {
    const std::uint32_t csh32 = static_cast<std::uint32_t>(shoup_quotient(c, p));
    const uint32x2_t cv = vdup_n_u32(c);
    const uint32x2_t cshv = vdup_n_u32(csh32);
    const uint32x2_t pv = vdup_n_u32(p);
    const uint64x2_t p2 = vdupq_n_u64(p);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t xv = vld1q_u32(x + i);
        uint32x4_t yv = vld1q_u32(y + i);
        uint64x2_t tlo = mulmod2(vget_low_u32(xv), cv, cshv, pv, p2);
        uint64x2_t thi = mulmod2(vget_high_u32(xv), cv, cshv, pv, p2);
        uint64x2_t dlo = vsubq_u64(vaddq_u64(vmovl_u32(vget_low_u32(yv)), p2), tlo);
        uint64x2_t dhi = vsubq_u64(vaddq_u64(vmovl_u32(vget_high_u32(yv)), p2), thi);
        dlo = vsubq_u64(dlo, vandq_u64(vcgeq_u64(dlo, p2), p2));
        dhi = vsubq_u64(dhi, vandq_u64(vcgeq_u64(dhi, p2), p2));
        vst1q_u32(y + i, vcombine_u32(vmovn_u64(dlo), vmovn_u64(dhi)));
    }
    for (; i < n; ++i) {
        std::uint32_t t = static_cast<std::uint32_t>(std::uint64_t(c) * x[i] % p);
        y[i] = y[i] >= t ? y[i] - t : y[i] + p - t;
    }
}

void scale_neon(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
    const std::uint32_t csh32 = static_cast<std::uint32_t>(shoup_quotient(c, p));
    const uint32x2_t cv = vdup_n_u32(c);
    const uint32x2_t cshv = vdup_n_u32(csh32);
    const uint32x2_t pv = vdup_n_u32(p);
    const uint64x2_t p2 = vdupq_n_u64(p);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t yv = vld1q_u32(y + i);
        uint64x2_t tlo = mulmod2(vget_low_u32(yv), cv, cshv, pv, p2);
        uint64x2_t thi = mulmod2(vget_high_u32(yv), cv, cshv, pv, p2);
        vst1q_u32(y + i, vcombine_u32(vmovn_u64(tlo), vmovn_u64(thi)));
    }
    for (; i < n; ++i) {
        y[i] = static_cast<std::uint32_t>(std::uint64_t(c) * y[i] % p);
    }
}

} // namespace

const Kernels* neon_kernels_impl() {
    static const Kernels k{"neon", &submul_neon, &scale_neon};
    return &k;
}

} // namespace ppr

#endif // __aarch64__
