#pragma once

// Elements of A_S in classical left normal form Δ^p·a_1⋯a_r, with group arithmetic,
// prefix/suffix lattice operations, np/pn forms, support and Δ^N views.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin {

struct Letter {
    int gen = 0;
    bool inverse = false;
    friend bool operator==(Letter, Letter) = default;
};
using Word = std::vector<Letter>;

inline Word positive_word(const std::vector<int>& gens) {
    Word w;
    for (int s : gens) w.push_back({s, false});
    return w;
}

inline Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l.inverse = !l.inverse;
    return out;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Element {
public:
    Element() = default;
    explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    const GroupContext& context() const { return *ctx_; }
    const ContextPtr& context_ptr() const { return ctx_; }

    long long delta_power() const { return p_; }
    const std::vector<CoxeterElement>& factors() const { return f_; }
    long long inf() const { return p_; }
    long long sup() const { return p_ + static_cast<long long>(f_.size()); }
    int canonical_length() const { return static_cast<int>(f_.size()); }
    bool is_identity() const { return p_ == 0 && f_.empty(); }
    bool is_positive() const { return p_ >= 0; }
    bool is_delta_power() const { return f_.empty(); }
    bool is_simple() const { return (p_ == 0 && f_.size() <= 1) || (p_ == 1 && f_.empty()); }

    friend bool operator==(const Element& a, const Element& b) { return a.p_ == b.p_ && a.f_ == b.f_; }
    // Canonical total order: by inf, canonical length, then factors.
    friend bool operator<(const Element& a, const Element& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        if (a.f_.size() != b.f_.size()) return a.f_.size() < b.f_.size();
        return a.f_ < b.f_;
    }
    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(p_) * 0x9e3779b97f4a7c15ull;
        for (const auto& f : f_) h = (h ^ f.hash()) * 1099511628211ull;
        return h;
    }

    // Trusted constructor from an already left-weighted factor list.
    static Element from_normal_form(ContextPtr ctx, long long p, std::vector<CoxeterElement> f) {
        Element e(std::move(ctx));
        e.p_ = p;
        e.f_ = std::move(f);
        return e;
    }

    // Right multiplication by a simple element, restoring left-weightedness.
    void append_simple(const CoxeterElement& b) {
        const GroupContext& G = *ctx_;
        if (b.is_identity()) return;
        if (b == G.delta()) {
            ++p_;
            for (auto& f : f_) f = G.tau(f);
            return;
        }
        f_.push_back(b);
        for (std::size_t i = f_.size() - 1; i > 0; --i) {
            if (!left_weight(G, f_[i - 1], f_[i])) break;
        }
        std::size_t lead = 0;
        while (lead < f_.size() && f_[lead] == G.delta()) ++lead;
        if (lead) {
            p_ += static_cast<long long>(lead);
            f_.erase(f_.begin(), f_.begin() + static_cast<long>(lead));
        }
        while (!f_.empty() && f_.back().is_identity()) f_.pop_back();
    }

private:
    // Moves letters from b into a until ∂(a) ∧ b = 1; returns whether anything moved.
    static bool left_weight(const GroupContext& G, CoxeterElement& a, CoxeterElement& b) {
        bool moved = false;
        while (true) {
            GeneratorSet cand = b.left_descents() - a.right_descents();
            if (cand.empty()) return moved;
            int s = cand.lowest();
            a = G.times_generator(a, s);
            b = G.generator_times(s, b);
            moved = true;
        }
    }

    ContextPtr ctx_;
    long long p_ = 0;
    std::vector<CoxeterElement> f_;
};

inline void require_same_context(const Element& a, const Element& b) {
    if (a.context_ptr() == b.context_ptr()) return;
    if (!a.context_ptr() || !b.context_ptr() || a.context().spec().matrix != b.context().spec().matrix)
        throw Error(ErrorKind::ContextMismatch, "elements belong to different groups");
}

inline Element identity(const ContextPtr& ctx) { return Element(ctx); }

inline Element delta_power(const ContextPtr& ctx, long long k) {
    return Element::from_normal_form(ctx, k, {});
}

inline Element from_simple(const ContextPtr& ctx, const CoxeterElement& s) {
    Element e(ctx);
    e.append_simple(s);
    return e;
}

inline Element normalize(const ContextPtr& ctx, long long p, const std::vector<CoxeterElement>& seq) {
    Element e = delta_power(ctx, p);
    for (const auto& s : seq) e.append_simple(s);
    return e;
}

inline Element tau(const Element& a, long long k = 1) {
    if (k % 2 == 0 || a.context().tau_trivial()) return a;
    std::vector<CoxeterElement> f;
    for (const auto& x : a.factors()) f.push_back(a.context().tau(x));
    return Element::from_normal_form(a.context_ptr(), a.delta_power(), std::move(f));
}

inline Element multiply(const Element& u, const Element& v) {
    require_same_context(u, v);
    const GroupContext& G = u.context();
    // u·Δ^q = Δ^q·τ^q(u)
    Element e = delta_power(u.context_ptr(), u.delta_power() + v.delta_power());
    for (const auto& f : u.factors()) e.append_simple(G.tau_power(f, v.delta_power()));
    for (const auto& f : v.factors()) e.append_simple(f);
    return e;
}

inline Element operator*(const Element& u, const Element& v) { return multiply(u, v); }

// (Δ^p a_1⋯a_r)⁻¹ = Δ^{-p-r}·τ^{-p-r+1}(∂a_r)⋯τ^{-p}(∂a_1), which is left-weighted.
inline Element inverse(const Element& u) {
    const GroupContext& G = u.context();
    long long p = u.delta_power();
    long long r = u.canonical_length();
    std::vector<CoxeterElement> f;
    f.reserve(r);
    for (long long i = r; i >= 1; --i) {
        // a_i⁻¹ = ∂(a_i)Δ⁻¹; moving all Δ⁻¹ to the left twists each factor.
        f.push_back(G.tau_power(G.complement(u.factors()[i - 1]), p + i));
    }
    return Element::from_normal_form(u.context_ptr(), -p - r, std::move(f));
}

inline Element power(const Element& u, long long m) {
    Element base = m < 0 ? inverse(u) : u;
    long long k = m < 0 ? -m : m;
    Element acc = identity(u.context_ptr());
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

// x⁻¹·u·x
inline Element conjugate(const Element& u, const Element& x) { return inverse(x) * u * x; }

inline Element generator(const ContextPtr& ctx, int s, bool inv = false) {
    if (s < 0 || s >= ctx->rank()) throw Error(ErrorKind::ParseError, "generator index out of range");
    Element e = from_simple(ctx, ctx->generator(s));
    return inv ? inverse(e) : e;
}

inline Element from_word(const ContextPtr& ctx, const Word& w) {
    // Each s⁻¹ becomes Δ⁻¹·τ(∂ s); collect Δ⁻¹'s on the left.
    long long neg = 0;
    for (const auto& l : w) {
        if (l.gen < 0 || l.gen >= ctx->rank()) throw Error(ErrorKind::ParseError, "generator index out of range");
        neg += l.inverse;
    }
    Element e = delta_power(ctx, -neg);
    long long seen = 0;
    for (const auto& l : w) {
        if (l.inverse) {
            ++seen;
            // s⁻¹ = ∂(s)·Δ⁻¹ and the Δ⁻¹ passes left over the remaining neg-seen inverses' worth.
            e.append_simple(ctx->tau_power(ctx->complement(ctx->generator(l.gen)), neg - seen + 1));
        } else {
            e.append_simple(ctx->tau_power(ctx->generator(l.gen), neg - seen));
        }
    }
    return e;
}

inline Element from_positive_word(const ContextPtr& ctx, const std::vector<int>& gens) {
    return from_word(ctx, positive_word(gens));
}

// Positive word for a positive element (Δ expanded).
inline std::vector<int> letters(const Element& e) {
    if (!e.is_positive()) throw Error(ErrorKind::InternalInconsistency, "letters() of a non-positive element");
    const GroupContext& G = e.context();
    std::vector<int> out;
    auto dw = G.word(G.delta());
    for (long long i = 0; i < e.delta_power(); ++i) out.insert(out.end(), dw.begin(), dw.end());
    for (const auto& f : e.factors()) {
        auto w = G.word(f);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

// A signed word representing e.
inline Word to_word(const Element& e) {
    const GroupContext& G = e.context();
    Word out;
    auto dw = positive_word(G.word(G.delta()));
    Word block = e.delta_power() >= 0 ? dw : inverse_word(dw);
    for (long long i = 0; i < std::abs(e.delta_power()); ++i) out = concat(out, block);
    for (const auto& f : e.factors()) out = concat(out, positive_word(G.word(f)));
    return out;
}

// Anti-automorphism fixing every generator: rev(Δ^p a_1⋯a_r) = rev(a_r)⋯rev(a_1)Δ^p.
inline Element reverse(const Element& e) {
    const GroupContext& G = e.context();
    Element out = delta_power(e.context_ptr(), e.delta_power());
    for (auto it = e.factors().rbegin(); it != e.factors().rend(); ++it)
        out.append_simple(G.tau_power(G.inverse(*it), e.delta_power()));
    return out;
}

// --- prefix/suffix lattice -------------------------------------------------

namespace detail {

// First simple factor of a positive element (Δ if inf > 0).
inline CoxeterElement head(const Element& a) {
    if (a.delta_power() > 0) return a.context().delta();
    if (a.factors().empty()) return a.context().identity();
    return a.factors().front();
}

inline Element left_divide_simple(const CoxeterElement& d, const Element& a) {
    return inverse(from_simple(a.context_ptr(), d)) * a;
}

inline Element meet_positive(Element a, Element b) {
    const GroupContext& G = a.context();
    Element m = identity(a.context_ptr());
    while (true) {
        CoxeterElement d = G.meet(head(a), head(b));
        if (d.is_identity()) return m;
        m.append_simple(d);
        a = left_divide_simple(d, a);
        b = left_divide_simple(d, b);
    }
}

}  // namespace detail

inline Element meet_prefix(const Element& a, const Element& b) {
    require_same_context(a, b);
    long long k = std::min(a.inf(), b.inf());
    Element shift = delta_power(a.context_ptr(), -k);
    return delta_power(a.context_ptr(), k) * detail::meet_positive(shift * a, shift * b);
}

inline Element meet_suffix(const Element& a, const Element& b) {
    return reverse(meet_prefix(reverse(a), reverse(b)));
}

// a ≼ c ⇔ a⁻¹ ≽ c⁻¹, so joins are inverted meets of the other order.
inline Element join_prefix(const Element& a, const Element& b) {
    return inverse(meet_suffix(inverse(a), inverse(b)));
}

inline Element join_suffix(const Element& a, const Element& b) {
    return inverse(meet_prefix(inverse(a), inverse(b)));
}

inline bool prefix_le(const Element& a, const Element& b) { return (inverse(a) * b).is_positive(); }
inline bool suffix_ge(const Element& a, const Element& b) { return (a * inverse(b)).is_positive(); }

// --- np / pn forms and support -------------------------------------------

struct MixedForm {
    Element negative;  // x
    Element positive;  // y; the element is x⁻¹y
};

struct PnForm {
    Element positive;  // a
    Element negative;  // b; the element is a·b⁻¹
};

inline MixedForm np_normal_form(const Element& u) {
    const auto& ctx = u.context_ptr();
    long long p = u.delta_power();
    if (p >= 0) return {identity(ctx), u};
    long long s = -p;
    long long r = u.canonical_length();
    long long k = std::min(s, r);
    // Δ^{-s}a_1⋯a_k is the negative part x⁻¹; the remaining factors form y.
    std::vector<CoxeterElement> neg(u.factors().begin(), u.factors().begin() + k);
    std::vector<CoxeterElement> pos(u.factors().begin() + k, u.factors().end());
    Element xinv = Element::from_normal_form(ctx, p, std::move(neg));
    Element y = Element::from_normal_form(ctx, 0, std::move(pos));
    return {inverse(xinv), y};
}

inline PnForm pn_normal_form(const Element& u) {
    MixedForm m = np_normal_form(reverse(u));
    return {reverse(m.positive), reverse(m.negative)};
}

inline GeneratorSet support_positive(const Element& e) {
    if (e.delta_power() > 0) return e.context().all();
    GeneratorSet out;
    for (const auto& f : e.factors()) out = out | f.support();
    return out;
}

inline GeneratorSet support(const Element& u) {
    MixedForm m = np_normal_form(u);
    return support_positive(m.negative) | support_positive(m.positive);
}

// --- simple elements and Δ^N structures ------------------------------------

class GarsideStructure {
public:
    GarsideStructure(ContextPtr ctx, int exponent = 1) : ctx_(std::move(ctx)), n_(exponent) {
        if (n_ < 1) throw Error(ErrorKind::InvalidSpec, "Garside exponent must be >= 1");
    }
    const ContextPtr& context_ptr() const { return ctx_; }
    int exponent() const { return n_; }
    Element garside_element() const { return delta_power(ctx_, n_); }
    Element garside_power(long long k) const { return delta_power(ctx_, k * n_); }
    // Conjugation by the Garside element Δ^N.
    Element tau(const Element& a, long long k = 1) const { return artin::tau(a, k * n_); }
    bool is_simple(const Element& s) const { return s.is_positive() && s.sup() <= n_; }

private:
    ContextPtr ctx_;
    int n_;
};

struct StructuredForm {
    long long power = 0;            // inf w.r.t. Δ^N
    std::vector<Element> factors;   // each positive, ≼ Δ^N, neither 1 nor Δ^N
    long long inf() const { return power; }
    long long sup() const { return power + static_cast<long long>(factors.size()); }
    int canonical_length() const { return static_cast<int>(factors.size()); }
};

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Grouping the classical factors (Δ^ρ, a_1, …, a_r) into blocks of N.
inline StructuredForm left_normal_form(const Element& e, const GarsideStructure& st) {
    const int N = st.exponent();
    const auto& ctx = e.context_ptr();
    long long q = floor_div(e.delta_power(), N);
    long long rho = e.delta_power() - q * N;
    StructuredForm out;
    out.power = q;
    const auto& f = e.factors();
    long long total = rho + static_cast<long long>(f.size());
    for (long long start = 0; start < total; start += N) {
        long long end = std::min(total, start + N);
        long long deltas = std::max(0LL, std::min(end, rho) - start);
        std::vector<CoxeterElement> blk;
        for (long long i = std::max(start, rho); i < end; ++i) blk.push_back(f[i - rho]);
        out.factors.push_back(Element::from_normal_form(ctx, deltas, std::move(blk)));
    }
    return out;
}

inline StructuredForm left_normal_form(const ContextPtr& ctx, const Word& w, const GarsideStructure& st) {
    return left_normal_form(from_word(ctx, w), st);
}

inline long long inf_n(const Element& e, int N) { return floor_div(e.delta_power(), N); }
inline long long sup_n(const Element& e, int N) { return -floor_div(-e.sup(), N); }
inline long long canonical_length_n(const Element& e, int N) { return sup_n(e, N) - inf_n(e, N); }

// ∂(s) = s⁻¹Δ^N for s simple in the structure.
inline Element complement(const Element& s, const GarsideStructure& st) {
    if (!st.is_simple(s)) throw Error(ErrorKind::NotSimple, "complement of a non-simple element");
    return inverse(s) * st.garside_element();
}

struct RewriteWitness {
    Element lhs;  // α·s
    Element rhs;  // t·α
};

// For α simple, t ⋠ α and t ≼ αs force αs = tα.
inline std::optional<RewriteWitness> simple_times_letter_rewrite(const Element& alpha, int t, int s) {
    if (!alpha.is_simple()) throw Error(ErrorKind::NotSimple, "simple_times_letter_rewrite needs a simple element");
    const auto& ctx = alpha.context_ptr();
    Element T = generator(ctx, t), S = generator(ctx, s);
    Element as = alpha * S;
    if (prefix_le(T, alpha) || !prefix_le(T, as)) return std::nullopt;
    Element ta = T * alpha;
    if (!(as == ta)) throw Error(ErrorKind::InternalInconsistency, "αs ≠ tα for a simple α");
    return RewriteWitness{as, ta};
}

}  // namespace artin

template <>
struct std::hash<artin::Element> {
    std::size_t operator()(const artin::Element& e) const { return e.hash(); }
};
