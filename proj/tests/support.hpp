#pragma once

// Shared helpers for the test suites: deterministic random generators for
// scalars and sparse polynomials. All seeds are explicit at the call sites.

#include <random>

#include "kakeya/parse.hpp"
#include "kakeya/poly.hpp"

namespace kakeya::testsupport {

inline Scalar random_scalar(std::mt19937_64& rng, const FieldCtx& ctx, int span = 20) {
    if (ctx.is_prime_field()) {
        std::uniform_int_distribution<std::uint64_t> d(0, ctx.modulus() - 1);
        return Scalar::from_int(ctx, static_cast<long long>(d(rng)));
    }
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    return Scalar::from_mpq(FieldCtx::rationals(), mpq_class(num(rng), den(rng)));
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, const FieldCtx& ctx) {
    for (;;) {
        Scalar s = random_scalar(rng, ctx);
        if (!s.is_zero()) return s;
    }
}

inline MultiPoly random_poly(std::mt19937_64& rng, const VarSet& vars, const FieldCtx& ctx,
                             unsigned max_deg = 4, unsigned max_terms = 6) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_deg);
    MultiPoly p(vars, ctx);
    unsigned k = nterms(rng);
    for (unsigned t = 0; t < k; ++t) {
        Monomial m(vars.size());
        unsigned budget = max_deg;
        for (auto& e : m) {
            e = expo(rng) % (budget + 1);
            budget -= e;
        }
        p.add_term(m, random_scalar(rng, ctx));
    }
    return p;
}

inline std::vector<Scalar> random_point(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t n) {
    std::vector<Scalar> p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.push_back(random_scalar(rng, ctx));
    return p;
}

}  // namespace kakeya::testsupport
