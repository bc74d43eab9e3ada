#include "ppr/field.hpp"

namespace ppr {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint32_t smallest_prime_at_least(std::uint32_t n) {
    if (n < 2) return 2;
    std::uint32_t p = n;
    while (!is_prime(p)) ++p;
    return p;
}

Field::Field(std::uint32_t p) : p_(p) {
    if (p < 2 || p > kMaxModulus) {
        throw CompositeModulus("field modulus must be a prime in [2, 2^31)");
    }
    if (!is_prime(p)) {
        throw CompositeModulus("field modulus " + std::to_string(p) + " is not prime");
    }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    std::uint64_t base = a % p_;
    std::uint64_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Elem>(acc);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw ZeroInverse("no inverse of 0 in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

} // namespace ppr
