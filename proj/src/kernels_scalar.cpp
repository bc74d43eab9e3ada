#include "ppr/kernels.hpp"

namespace ppr {
namespace {

void submul_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                   std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t t = static_cast<std::uint32_t>(std::uint64_t(c) * x[i] % p);
        y[i] = y[i] >= t ? y[i] - t : y[i] + p - t;
    }
}

void scale_scalar(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = static_cast<std::uint32_t>(std::uint64_t(c) * y[i] % p);
    }
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", &submul_scalar, &scale_scalar};
    return k;
}

} // namespace ppr
