// AVX2 variants of the F_p row kernels. Four elements per iteration in 64-bit
// lanes: operands stay below 2^31, so 32x32 products via _mm256_mul_epu32 are
// exact and Shoup reduction needs only shifts, subtracts and one compare.

#include "ppr/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace ppr {
namespace {

// floor(c * 2^32 / p); fits in 32 bits because c < p.
inline std::uint64_t shoup_quotient(std::uint32_t c, std::uint32_t p) {
    return (std::uint64_t(c) << 32) / p;
}

// c*x mod p for four x held in 64-bit lanes, result canonical in [0, p).
inline __m256i mulmod4(__m256i x64, __m256i c64, __m256i csh64, __m256i p64,
                       __m256i pm1_64) {
    __m256i prod = _mm256_mul_epu32(x64, c64);
    __m256i qhat = _mm256_srli_epi64(_mm256_mul_epu32(x64, csh64), 32);
    __m256i t = _mm256_sub_epi64(prod, _mm256_mul_epu32(qhat, p64));
    // t in [0, 2p): subtract p once when t > p-1.
    __m256i ge = _mm256_cmpgt_epi64(t, pm1_64);
    return _mm256_sub_epi64(t, _mm256_and_si256(ge, p64));
}

// Low 32 bits of each 64-bit lane, packed into the low 128 bits.
inline __m128i pack_low32(__m256i v) {
    const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
    return _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(v, idx));
}

void submul_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t c, std::uint32_t p) {
    const __m256i c64 = _mm256_set1_epi64x(c);
    const __m256i csh64 = _mm256_set1_epi64x(static_cast<long long>(shoup_quotient(c, p)));
    const __m256i p64 = _mm256_set1_epi64x(p);
    const __m256i pm1_64 = _mm256_set1_epi64x(static_cast<long long>(p) - 1);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x64 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
        __m256i y64 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
        __m256i t = mulmod4(x64, c64, csh64, p64, pm1_64);
        // y + p - t in (0, 2p): one conditional subtraction.
        __m256i d = _mm256_sub_epi64(_mm256_add_epi64(y64, p64), t);
        __m256i ge = _mm256_cmpgt_epi64(d, pm1_64);
        d = _mm256_sub_epi64(d, _mm256_and_si256(ge, p64));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), pack_low32(d));
    }
    for (; i < n; ++i) {
        std::uint32_t t = static_cast<std::uint32_t>(std::uint64_t(c) * x[i] % p);
        y[i] = y[i] >= t ? y[i] - t : y[i] + p - t;
    }
}

void scale_avx2(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
    const __m256i c64 = _mm256_set1_epi64x(c);
    const __m256i csh64 = _mm256_set1_epi64x(static_cast<long long>(shoup_quotient(c, p)));
    const __m256i p64 = _mm256_set1_epi64x(p);
    const __m256i pm1_64 = _mm256_set1_epi64x(static_cast<long long>(p) - 1);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i y64 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
        __m256i t = mulmod4(y64, c64, csh64, p64, pm1_64);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), pack_low32(t));
    }
    for (; i < n; ++i) {
        y[i] = static_cast<std::uint32_t>(std::uint64_t(c) * y[i] % p);
    }
}

} // namespace

const Kernels* avx2_kernels_impl() {
    static const Kernels k{"avx2", &submul_avx2, &scale_avx2};
    return &k;
}

} // namespace ppr

#endif // x86_64
