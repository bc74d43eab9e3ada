#include "ppr/instance.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace ppr {

const char* to_string(Conjecture c) {
    return c == Conjecture::Original ? "original" : "new";
}

const char* to_string(Case c) {
    return c == Case::Polynomial ? "poly" : "rand";
}

void Params::validate() const {
    if (lambda < 1) throw InvalidParams("lambda must be >= 1");
    if (!is_prime(q) || q > Field::kMaxModulus) throw InvalidParams("q must be a prime < 2^31");
    if (std::uint64_t(lambda) + 1 > q) throw InvalidParams("lambda+1 must be <= q");
    if (s < 1 || s > q) throw InvalidParams("subset size must satisfy 1 <= s <= q");
    if (m < 1) throw InvalidParams("m must be >= 1");
    if (conjecture == Conjecture::Original && s != q) {
        throw InvalidParams("original conjecture requires s = q");
    }
}

std::uint32_t Params::default_subset_size(std::uint32_t q, std::uint32_t lambda) {
    return std::min((q + 1) / 2, 100 * lambda);
}

Elem eval_polynomial(const Polynomial& poly, Elem x, const Field& field) {
    Elem acc = 0;
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
        acc = field.add(field.mul(acc, x), *it);
    }
    return acc;
}

Instance build_instance(const Params& params, std::uint64_t master_seed,
                        std::uint64_t trial_index, const BuildOptions& opts) {
    params.validate();
    const Field field(params.q);
    const std::uint32_t q = params.q;

    Permutation perm;
    if (opts.identity_permutation) {
        perm.map.resize(std::size_t(q) * q);
        std::iota(perm.map.begin(), perm.map.end(), 0u);
    } else {
        Rng rng = derive_rng(master_seed, trial_index, "perm");
        perm = sample_permutation(rng, q * q);
    }

    Instance inst;
    inst.params = params;
    inst.rows.resize(params.m);
    if (opts.retain_secrets) {
        inst.secrets.emplace();
        inst.secrets->omegas.reserve(params.m);
    }

    std::vector<Elem> full_domain;
    if (params.conjecture == Conjecture::Original) {
        full_domain.resize(q);
        std::iota(full_domain.begin(), full_domain.end(), 0u);
    }

    for (std::uint64_t i = 0; i < params.m; ++i) {
        const std::string idx = std::to_string(i);

        Polynomial poly;
        FunctionTable func;
        if (params.kase == Case::Polynomial) {
            Rng rng = derive_rng(master_seed, trial_index, "poly:" + idx);
            poly = sample_polynomial(rng, params.lambda, field);
        } else {
            Rng rng = derive_rng(master_seed, trial_index, "func:" + idx);
            func = sample_function(rng, field);
        }

        const std::vector<Elem>* domain = &full_domain;
        EvalSet omega;
        if (params.conjecture == Conjecture::New) {
            Rng rng = derive_rng(master_seed, trial_index, "omega:" + idx);
            omega = sample_subset(rng, params.s, field);
            domain = &omega.points;
        }

        auto& row = inst.rows[i];
        row.reserve(params.s);
        for (Elem x : *domain) {
            Elem fx = params.kase == Case::Polynomial ? eval_polynomial(poly, x, field)
                                                      : func.values[x];
            row.push_back(perm.map[col_index(x, fx, q)]);
        }
        std::sort(row.begin(), row.end());

        if (opts.retain_secrets) {
            if (params.kase == Case::Polynomial) {
                inst.secrets->polys.push_back(std::move(poly));
            } else {
                inst.secrets->funcs.push_back(std::move(func));
            }
            if (params.conjecture == Conjecture::New) {
                inst.secrets->omegas.push_back(std::move(omega));
            }
        }
    }

    if (opts.retain_secrets) {
        inst.secrets->perm = std::move(perm);
    }
    return inst;
}

std::string Instance::to_debug_json() const {
    nlohmann::json j;
    j["lambda"] = params.lambda;
    j["q"] = params.q;
    j["m"] = params.m;
    j["s"] = params.s;
    j["conjecture"] = to_string(params.conjecture);
    j["case"] = to_string(params.kase);
    j["rows"] = rows;
    return j.dump();
}

} // namespace ppr
