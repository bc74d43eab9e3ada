#include "ppr/rng.hpp"

#include <algorithm>
#include <numeric>

namespace ppr {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t Rng::next() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    // Accept r >= 2^64 mod bound; the accepted range covers each residue
    // class exactly floor(2^64 / bound) times.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

Rng derive_rng(std::uint64_t master_seed, std::uint64_t trial_index, std::string_view stream_label) {
    std::uint64_t s = mix64(master_seed ^ kGolden);
    s = mix64(s ^ trial_index);
    s = mix64(s ^ fnv1a64(stream_label));
    return Rng(s);
}

Polynomial sample_polynomial(Rng& rng, std::uint32_t lambda, const Field& field) {
    if (std::uint64_t(lambda) + 1 > field.modulus()) {
        throw InvalidParams("degree bound requires lambda+1 <= q");
    }
    Polynomial poly;
    poly.coeffs.resize(lambda + 1);
    for (auto& c : poly.coeffs) {
        c = static_cast<Elem>(rng.next_below(field.modulus()));
    }
    return poly;
}

FunctionTable sample_function(Rng& rng, const Field& field) {
    FunctionTable table;
    table.values.resize(field.modulus());
    for (auto& v : table.values) {
        v = static_cast<Elem>(rng.next_below(field.modulus()));
    }
    return table;
}

Permutation sample_permutation(Rng& rng, std::uint32_t size) {
    Permutation perm;
    perm.map.resize(size);
    std::iota(perm.map.begin(), perm.map.end(), 0u);
    for (std::uint32_t i = size; i > 1; --i) {
        std::uint32_t j = static_cast<std::uint32_t>(rng.next_below(i));
        std::swap(perm.map[i - 1], perm.map[j]);
    }
    return perm;
}

EvalSet sample_subset(Rng& rng, std::uint32_t s, const Field& field) {
    const std::uint32_t q = field.modulus();
    if (s > q) {
        throw SubsetTooLarge("subset size " + std::to_string(s) + " exceeds field size " + std::to_string(q));
    }
    std::vector<Elem> pool(q);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint32_t i = 0; i < s; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(rng.next_below(q - i));
        std::swap(pool[i], pool[j]);
    }
    EvalSet set;
    set.points.assign(pool.begin(), pool.begin() + s);
    std::sort(set.points.begin(), set.points.end());
    return set;
}

} // namespace ppr
