#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ppr/field.hpp"

namespace ppr {

/// Deterministic 64-bit stream, identical on every platform.
///
/// Derivation (bit-exact, see README for the constants):
///   mix64(z) is the SplitMix64 finalizer
///     z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///     z ^= z >> 27; z *= 0x94D049BB133111EB;
///     z ^= z >> 31;
///   state0 = mix64(mix64(mix64(master_seed ^ GOLDEN) ^ trial_index) ^ fnv1a64(label))
///   next(): state += GOLDEN (0x9E3779B97F4A7C15); return mix64(state)
///
/// Distinct labels ("perm", "poly:i", "func:i", "omega:i") give per-object
/// streams, so each sampled object is individually reproducible regardless
/// of sampling order.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next();

    /// Uniform draw from [0, bound) by rejection (no modulo bias); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);
std::uint64_t fnv1a64(std::string_view s);

Rng derive_rng(std::uint64_t master_seed, std::uint64_t trial_index, std::string_view stream_label);

/// Coefficient vector of length λ+1; index j holds the coefficient of X^j.
/// Leading coefficients may be zero ("degree at most λ").
struct Polynomial {
    std::vector<Elem> coeffs;
};

/// Value table of a function F -> F; index α holds f(α).
struct FunctionTable {
    std::vector<Elem> values;
};

/// Bijection on {0, ..., n-1}; map[j] is the image of column j.
struct Permutation {
    std::vector<std::uint32_t> map;
};

/// Strictly increasing subset of F.
struct EvalSet {
    std::vector<Elem> points;
};

/// λ+1 independent uniform coefficients. Requires λ+1 <= q.
Polynomial sample_polynomial(Rng& rng, std::uint32_t lambda, const Field& field);

/// q independent uniform values.
FunctionTable sample_function(Rng& rng, const Field& field);

/// Fisher-Yates shuffle of the identity array.
Permutation sample_permutation(Rng& rng, std::uint32_t size);

/// Uniform s-subset of F (partial Fisher-Yates, then sort).
/// Throws SubsetTooLarge if s > q.
EvalSet sample_subset(Rng& rng, std::uint32_t s, const Field& field);

} // namespace ppr
