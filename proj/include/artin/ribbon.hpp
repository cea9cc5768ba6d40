#pragma once

#include "artin/garside.hpp"

namespace artin {

// Δ_X as a group element.
inline Element delta_of(const ContextPtr& ctx, GeneratorSet X) { return from_simple(ctx, ctx->longest_element(X)); }

// r_{X,t} = Δ_X⁻¹·Δ_{X∪{t}}; the identity when t ∈ X.
inline Element ribbon(const ContextPtr& ctx, GeneratorSet X, int t) {
    if (X.contains(t)) return identity(ctx);
    const GroupContext& G = *ctx;
    CoxeterElement q = G.compose(G.inverse(G.longest_element(X)), G.longest_element(X | GeneratorSet::single(t)));
    return from_simple(ctx, q);
}

}  // namespace artin
