#pragma once

// Parabolic subgroups P = g·A_X·g⁻¹ keyed by z_P, membership, minimal standardizers
// and parabolic closures.

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "artin/conjugacy.hpp"
#include "artin/ribbon.hpp"

namespace artin {

// z_X = Δ_X^e.
inline Element z_standard(const ContextPtr& ctx, GeneratorSet X) {
    if (X.empty()) return identity(ctx);
    return power(delta_of(ctx, X), ctx->central_exponent(X));
}

namespace detail {

// Least positive c with c⁻¹zc positive: fixed point of c ↦ z⁻¹(c ∨ zc) from c = 1.
inline Element least_positive_standardizer(const Element& z) {
    Element zinv = inverse(z), c = identity(z.context_ptr());
    while (true) {
        Element nc = zinv * join_prefix(c, z * c);
        if (nc == c) return c;
        c = nc;
    }
}

}  // namespace detail

class ParabolicSubgroup {
public:
    ParabolicSubgroup() = default;

    // P = g·A_X·g⁻¹, re-based through its minimal standardizer.
    ParabolicSubgroup(const Element& g, GeneratorSet X) : z_(g.context_ptr()) {
        const auto& ctx = g.context_ptr();
        if (!X.subset_of(ctx->all())) throw Error(ErrorKind::InvalidSpec, "base is not a subset of S");
        if (X.empty()) {
            b_ = identity(ctx);
            return;
        }
        z_ = g * z_standard(ctx, X) * inverse(g);
        Element b = pn_normal_form(z_).negative;
        Element zy = conjugate(z_, b);
        if (!zy.is_positive()) {
            by_pn_ = false;
            b = detail::least_positive_standardizer(z_);
            zy = conjugate(z_, b);
        }
        GeneratorSet Y = support(zy);
        if (!(zy == z_standard(ctx, Y)) || Y.size() != X.size())
            throw Error(ErrorKind::InternalInconsistency, "standardizer does not conjugate z_P to some z_Y");
        b_ = b;
        base_ = Y;
    }

    const ContextPtr& context_ptr() const { return z_.context_ptr(); }
    const GroupContext& context() const { return z_.context(); }
    // b with b⁻¹·P·b = A_base.
    const Element& standardizer() const { return b_; }
    GeneratorSet base() const { return base_; }
    const Element& z() const { return z_; }

    // False when the pn-form route failed and the fixed-point search was used.
    bool standardized_by_pn() const { return by_pn_; }

    bool is_trivial() const { return base_.empty(); }
    bool is_whole() const { return base_ == context().all(); }
    bool is_proper() const { return !is_whole(); }
    bool is_irreducible() const { return context().components(base_).size() == 1; }

    friend bool operator==(const ParabolicSubgroup& a, const ParabolicSubgroup& b) { return a.z_ == b.z_; }
    friend bool operator<(const ParabolicSubgroup& a, const ParabolicSubgroup& b) { return a.z_ < b.z_; }

private:
    Element z_;
    Element b_;
    GeneratorSet base_;
    bool by_pn_ = true;
};

inline ParabolicSubgroup make_parabolic(const Element& g, GeneratorSet X) { return ParabolicSubgroup(g, X); }

inline ParabolicSubgroup standard_parabolic(const ContextPtr& ctx, GeneratorSet X) {
    return ParabolicSubgroup(identity(ctx), X);
}

inline ParabolicSubgroup trivial_parabolic(const ContextPtr& ctx) { return standard_parabolic(ctx, GeneratorSet{}); }

inline const Element& z_of(const ParabolicSubgroup& P) { return P.z(); }

inline bool parabolic_equal(const ParabolicSubgroup& P, const ParabolicSubgroup& Q) {
    require_same_context(P.z(), Q.z());
    return P == Q;
}

// x⁻¹·P·x
inline ParabolicSubgroup conjugated_parabolic(const ParabolicSubgroup& P, const Element& x) {
    return ParabolicSubgroup(inverse(x) * P.standardizer(), P.base());
}

inline bool contains_element(const ParabolicSubgroup& P, const Element& a) {
    require_same_context(P.z(), a);
    return support(conjugate(a, P.standardizer())).subset_of(P.base());
}

// Q ⊆ P, using Q = P_{z_Q}.
inline bool contains_subgroup(const ParabolicSubgroup& P, const ParabolicSubgroup& Q) {
    return contains_element(P, Q.z());
}

inline std::pair<Element, GeneratorSet> minimal_standardizer(const ParabolicSubgroup& P) {
    return {P.standardizer(), P.base()};
}

// Generators g·s·g⁻¹ (s in the base) for the standardized representation.
inline std::vector<Element> parabolic_generators(const ParabolicSubgroup& P) {
    std::vector<Element> out;
    Element b = P.standardizer(), binv = inverse(b);
    for (int s : P.base().members()) out.push_back(b * generator(P.context_ptr(), s) * binv);
    return out;
}

struct ClosureInfo {
    ParabolicSubgroup closure;
    std::string method;       // "trivial", "positive support" or "RSSS_inf support"
    Element conjugator;       // conjugator⁻¹·α·conjugator has the standard support used
    int nstar = 0;            // RSSS_inf route only
    bool stabilized = true;   // false if the I_inf iteration hit its exponent cap
};

inline ClosureInfo parabolic_closure_info(const Element& a, const SummitOptions& opt = {}) {
    const auto& ctx = a.context_ptr();
    if (a.is_identity()) return {trivial_parabolic(ctx), "trivial", identity(ctx)};
    Conjugation s = detail::iterate_to_sss(a, GarsideStructure(ctx, 1), opt);
    if (s.result.inf() >= 0 || s.result.sup() <= 0)
        return {ParabolicSubgroup(s.conjugator, support(s.result)), "positive support", s.conjugator};
    IInfinityResult r = element_of_I_infinity(a, SummitKind::RSSS, opt);
    return {ParabolicSubgroup(r.conjugator, support(r.element)), "RSSS_inf support", r.conjugator, r.nstar,
            r.stabilized};
}

inline ParabolicSubgroup parabolic_closure(const Element& a, const SummitOptions& opt = {}) {
    return parabolic_closure_info(a, opt).closure;
}

inline int phi(const Element& g, const SummitOptions& opt = {}) {
    if (g.is_identity()) return 0;
    return g.context().delta_length(parabolic_closure(g, opt).base());
}

// Figure-2 style quotient of a positive-conjugates graph: vertices z_{supp(v)}, arrows deduplicated.
struct ZActionGraph {
    std::vector<GeneratorSet> bases;
    std::vector<Element> z;
    std::vector<Arrow> arrows;
};

inline ZActionGraph z_action_graph(const SummitGraph& g) {
    ZActionGraph out;
    if (g.vertices.empty()) return out;
    const auto& ctx = g.vertices.front().context_ptr();
    std::vector<GeneratorSet> supp;
    for (const auto& v : g.vertices) supp.push_back(support(v));
    out.bases = supp;
    std::sort(out.bases.begin(), out.bases.end());
    out.bases.erase(std::unique(out.bases.begin(), out.bases.end()), out.bases.end());
    for (auto X : out.bases) out.z.push_back(z_standard(ctx, X));
    auto idx = [&](GeneratorSet X) {
        return static_cast<std::size_t>(std::lower_bound(out.bases.begin(), out.bases.end(), X) - out.bases.begin());
    };
    for (const auto& a : g.arrows) {
        Arrow b{idx(supp[a.from]), idx(supp[a.to]), a.label};
        bool dup = std::any_of(out.arrows.begin(), out.arrows.end(),
                               [&](const Arrow& c) { return c.from == b.from && c.to == b.to && c.label == b.label; });
        if (!dup) out.arrows.push_back(b);
    }
    std::sort(out.arrows.begin(), out.arrows.end(), [](const Arrow& x, const Arrow& y) {
        return std::tie(x.from, x.to) != std::tie(y.from, y.to) ? std::tie(x.from, x.to) < std::tie(y.from, y.to)
                                                                : x.label < y.label;
    });
    return out;
}

}  // namespace artin
