#pragma once

#include <cstddef>
#include <cstdint>

namespace ppr {

/// Vectorizable inner loops of the row-reduction engine. All variants share
/// one contract:
///
///   submul:  y[i] <- (y[i] - c*x[i]) mod p
///   scale:   y[i] <- (c*y[i]) mod p
///
/// with p < 2^31 and every input element canonical in [0, p). Outputs are
/// canonical again, bit-identical across variants (the equivalence tests
/// enforce this element-wise).
///
/// The SIMD variants reduce c*x with a Shoup-style precomputed quotient
/// c_sh = floor(c * 2^32 / p):  q = floor(c_sh * x / 2^32) satisfies
/// 0 <= c*x - q*p < 2p, so one conditional subtraction lands in [0, p).
struct Kernels {
    const char* name;
    void (*submul)(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                   std::uint32_t c, std::uint32_t p);
    void (*scale)(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p);
};

/// Portable reference implementation (plain 64-bit `%`).
const Kernels& scalar_kernels();

/// AVX2 variant; nullptr when unsupported by the build or the running CPU.
const Kernels* avx2_kernels();

/// NEON variant; nullptr off aarch64.
const Kernels* neon_kernels();

/// Best available variant for this process. Honors PPR_KERNELS=scalar|avx2|neon
/// (falls back to scalar if the requested variant is unavailable).
const Kernels& active_kernels();

} // namespace ppr
