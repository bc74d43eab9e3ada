#pragma once

#include <cstdint>

#include "ppr/errors.hpp"

namespace ppr {

/// A canonical element of F_p, always in [0, p). The owning Field carries p;
/// elements are plain integers so dense rows can live in flat uint32 arrays.
using Elem = std::uint32_t;

/// Arithmetic context for the prime field F_p, p < 2^31.
///
/// The modulus cap keeps every product of canonical elements inside a
/// 64-bit intermediate, so all operations reduce with a single `%`.
class Field {
public:
    static constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

    /// Verifies primality by trial division; throws CompositeModulus otherwise.
    explicit Field(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b; // < 2^32, no overflow for p < 2^31
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(std::uint64_t(a) * b % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    /// a^e by square-and-multiply; pow(0, 0) = 1.
    Elem pow(Elem a, std::uint64_t e) const;

    /// Multiplicative inverse via Fermat; throws ZeroInverse on a = 0.
    Elem inv(Elem a) const;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Smallest prime >= n (the default q for a given λ is smallest_prime_at_least(λ²)).
std::uint32_t smallest_prime_at_least(std::uint32_t n);

} // namespace ppr
