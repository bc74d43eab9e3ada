#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppr/field.hpp"
#include "ppr/rng.hpp"

namespace ppr {

enum class Conjecture { Original, New };
enum class Case { Polynomial, RandomFunction };

const char* to_string(Conjecture c);
const char* to_string(Case c);

/// Public parameters of one experiment family.
struct Params {
    std::uint32_t lambda = 0;
    std::uint32_t q = 0;      // prime field size
    std::uint64_t m = 0;      // number of point sets
    Conjecture conjecture = Conjecture::Original;
    std::uint32_t s = 0;      // evaluation-set size; s = q for Original
    Case kase = Case::Polynomial;

    /// Throws InvalidParams unless λ >= 1, q prime, λ+1 <= q, 1 <= s <= q,
    /// m >= 1, and (conjecture == Original ⇒ s == q).
    void validate() const;

    /// Desk-scale stand-in for the 100·λ evaluation-set size when it would
    /// exceed q: min(⌈q/2⌉, 100·λ).
    static std::uint32_t default_subset_size(std::uint32_t q, std::uint32_t lambda);
};

/// Secret data retained only when a debug build option asks for it, so
/// certificate checks can compose witnesses with the permutation.
struct InstanceSecrets {
    Permutation perm;
    std::vector<Polynomial> polys;      // case Polynomial
    std::vector<FunctionTable> funcs;   // case RandomFunction
    std::vector<EvalSet> omegas;
};

/// What the distinguisher sees: m sorted rows of distinct column indices in
/// [0, q²). Row i is { π(x, f_i(x)) : x ∈ Ω⁽ⁱ⁾ } in flattened column order.
struct Instance {
    Params params;
    std::vector<std::vector<std::uint32_t>> rows;
    std::optional<InstanceSecrets> secrets;

    std::string to_debug_json() const;
};

struct BuildOptions {
    bool retain_secrets = false;
    bool identity_permutation = false; // debug override for certificate tests
};

/// Horner evaluation of coeffs at x.
Elem eval_polynomial(const Polynomial& poly, Elem x, const Field& field);

/// Flattened index of (α, β): α·q + β.
inline std::uint32_t col_index(Elem alpha, Elem beta, std::uint32_t q) {
    return alpha * q + beta;
}

Instance build_instance(const Params& params, std::uint64_t master_seed,
                        std::uint64_t trial_index, const BuildOptions& opts = {});

} // namespace ppr
