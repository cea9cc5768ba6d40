#pragma once

// Brute-force oracles. Group computations here go through subword reversing on the
// Artin presentation alone; the normal-form engine is only used to deduplicate
// enumerations and as the final comparator.

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "artin/lattice.hpp"

namespace artin::oracle {

// Letters are ±(s+1).
using SWord = std::vector<int>;

class Reverser {
public:
    explicit Reverser(CoxeterSpec spec, std::size_t step_limit = 2000000)
        : spec_(std::move(spec)), limit_(step_limit) {}

    const CoxeterSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }

    static SWord encode(const Word& w) {
        SWord out;
        for (const auto& l : w) out.push_back(l.inverse ? -(l.gen + 1) : l.gen + 1);
        return out;
    }
    static Word decode(const SWord& w) {
        Word out;
        for (int x : w) out.push_back({std::abs(x) - 1, x < 0});
        return out;
    }
    static SWord inv(const SWord& w) {
        SWord out(w.rbegin(), w.rend());
        for (int& x : out) x = -x;
        return out;
    }
    static SWord rev(const SWord& w) { return SWord(w.rbegin(), w.rend()); }
    static SWord cat(SWord a, const SWord& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    // Alternating positive word of length len starting with a: a b a b …
    SWord alternating(int a, int b, int len) const {
        SWord out;
        for (int i = 0; i < len; ++i) out.push_back(i % 2 == 0 ? a : b);
        return out;
    }

    // s⁻¹t → (t s t…)(s t s…)⁻¹, each of length m−1; s⁻¹s → ε. Ends as P·N⁻¹.
    std::pair<SWord, SWord> right_reverse(SWord w) const {
        std::size_t steps = 0;
        std::size_t i = 0;
        while (i + 1 < w.size()) {
            if (!(w[i] < 0 && w[i + 1] > 0)) {
                ++i;
                continue;
            }
            if (++steps > limit_) throw Error(ErrorKind::BudgetExceeded, "reversing step limit");
            int s = -w[i], t = w[i + 1];
            SWord mid;
            if (s != t) {
                int m = spec_.m(s - 1, t - 1);
                SWord f = alternating(t, s, m - 1), g = alternating(s, t, m - 1);
                mid = cat(f, inv(g));
            }
            w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
            w.insert(w.begin() + static_cast<long>(i), mid.begin(), mid.end());
            i = i > 0 ? i - 1 : 0;
        }
        auto split = std::find_if(w.begin(), w.end(), [](int x) { return x < 0; });
        SWord P(w.begin(), split), Ninv(split, w.end());
        return {P, inv(Ninv)};
    }

    // s·t⁻¹ → (…s t)⁻¹(…t s) with alternating words of length m−1 ending in t resp. s. Ends as x⁻¹·y.
    std::pair<SWord, SWord> left_reverse(SWord w) const {
        std::size_t steps = 0;
        std::size_t i = 0;
        while (i + 1 < w.size()) {
            if (!(w[i] > 0 && w[i + 1] < 0)) {
                ++i;
                continue;
            }
            if (++steps > limit_) throw Error(ErrorKind::BudgetExceeded, "reversing step limit");
            int s = w[i], t = -w[i + 1];
            SWord mid;
            if (s != t) {
                int m = spec_.m(s - 1, t - 1);
                // words of length m−1 ending in t (resp. s)
                SWord u = rev(alternating(t, s, m - 1)), v = rev(alternating(s, t, m - 1));
                mid = cat(inv(u), v);
            }
            w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
            w.insert(w.begin() + static_cast<long>(i), mid.begin(), mid.end());
            i = i > 0 ? i - 1 : 0;
        }
        auto split = std::find_if(w.begin(), w.end(), [](int x) { return x > 0; });
        SWord Xinv(w.begin(), split), Y(split, w.end());
        return {inv(Xinv), Y};
    }

    // Irreducible left fraction x⁻¹y of w (right then left reversing).
    std::pair<SWord, SWord> np(const SWord& w) const {
        auto [P, N] = right_reverse(w);
        return left_reverse(cat(P, inv(N)));
    }

    bool is_identity(const SWord& w) const {
        auto [x, y] = np(w);
        return x.empty() && y.empty();
    }
    bool equal(const SWord& u, const SWord& v) const { return is_identity(cat(inv(u), v)); }
    bool prefix_le(const SWord& u, const SWord& v) const { return np(cat(inv(u), v)).first.empty(); }
    bool is_positive(const SWord& w) const { return np(w).first.empty(); }

    // u ∧ v = u·(1 ∧ u⁻¹v), and 1 ∧ x⁻¹y = x⁻¹.
    SWord meet(const SWord& u, const SWord& v) const { return cat(u, inv(np(cat(inv(u), v)).first)); }
    // u ∨ v = u·(1 ∨ u⁻¹v), and 1 ∨ x⁻¹y = y' where x⁻¹y reverses to y'x'⁻¹.
    SWord join(const SWord& u, const SWord& v) const {
        auto [x, y] = np(cat(inv(u), v));
        return cat(u, right_reverse(cat(inv(x), y)).first);
    }
    SWord meet_suffix(const SWord& u, const SWord& v) const { return rev(meet(rev(u), rev(v))); }
    SWord join_suffix(const SWord& u, const SWord& v) const { return rev(join(rev(u), rev(v))); }

    // a·b⁻¹ with no common suffix.
    std::pair<SWord, SWord> pn(const SWord& w) const {
        auto [x, y] = np(rev(w));
        return {rev(y), rev(x)};
    }

    GeneratorSet support(const SWord& w) const {
        auto [x, y] = np(w);
        GeneratorSet out;
        for (int a : x) out.insert(a - 1);
        for (int a : y) out.insert(a - 1);
        return out;
    }

    // u ∈ g·A_X·g⁻¹
    bool member(const SWord& g, GeneratorSet X, const SWord& u) const {
        return support(cat(cat(inv(g), u), g)).subset_of(X);
    }

    // Lexicographically least positive word of a positive element, by greedy division.
    SWord lexmin(const SWord& w) const {
        SWord out;
        SWord cur = np(w).second;
        while (!cur.empty()) {
            for (int s = 1; s <= rank(); ++s) {
                auto [x, y] = np(cat({-s}, cur));
                if (x.empty()) {
                    out.push_back(s);
                    cur = y;
                    break;
                }
            }
        }
        return out;
    }

    SWord delta_word() const {
        SWord d;
        for (int s = 1; s <= rank(); ++s) d = join(d, {s});
        return np(d).second;
    }

private:
    CoxeterSpec spec_;
    std::size_t limit_;
};

inline SWord word_of(const Element& e) { return Reverser::encode(to_word(e)); }

// Positive element shifted by Δ^K: returns (K, positive word W) with Δ^K·w = W.
inline std::pair<int, SWord> shift_positive(const Reverser& R, const SWord& w) {
    int K = static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
    SWord d = R.delta_word(), pre;
    for (int i = 0; i < K; ++i) pre = Reverser::cat(pre, d);
    return {K, R.np(Reverser::cat(pre, w)).second};
}

// All common prefixes of two positive words, keyed by lexmin representative.
inline std::vector<SWord> common_prefixes(const Reverser& R, const SWord& u, const SWord& v,
                                          std::size_t limit = 50000) {
    std::vector<SWord> out{SWord{}};
    std::set<SWord> seen{SWord{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (int s = 1; s <= R.rank(); ++s) {
            SWord c = Reverser::cat(out[i], {s});
            if (!R.prefix_le(c, u) || !R.prefix_le(c, v)) continue;
            SWord key = R.lexmin(c);
            if (seen.insert(key).second) {
                out.push_back(key);
                if (out.size() > limit) throw Error(ErrorKind::BudgetExceeded, "too many common prefixes");
            }
        }
    }
    return out;
}

enum class Order { Prefix, Suffix };

// Greatest common prefix (suffix) as the maximum of the exhaustively enumerated set.
inline SWord brute_meet(const Reverser& R, const SWord& u, const SWord& v, Order order = Order::Prefix) {
    if (u.size() > 8 || v.size() > 8 || R.rank() > 4)
        throw Error(ErrorKind::BudgetExceeded, "brute_meet is limited to words of length <= 8 in rank <= 4");
    if (order == Order::Suffix)
        return Reverser::rev(brute_meet(R, Reverser::rev(u), Reverser::rev(v), Order::Prefix));
    auto [ku, U] = shift_positive(R, u);
    auto [kv, V] = shift_positive(R, v);
    int K = std::max(ku, kv);
    SWord d = R.delta_word();
    auto lift = [&](int k, const SWord& W) {
        SWord pre;
        for (int i = k; i < K; ++i) pre = Reverser::cat(pre, d);
        return R.np(Reverser::cat(pre, W)).second;
    };
    auto prefixes = common_prefixes(R, lift(ku, U), lift(kv, V));
    std::size_t best = 0;
    for (std::size_t i = 0; i < prefixes.size(); ++i)
        if (prefixes[i].size() > prefixes[best].size()) best = i;
    for (std::size_t i = 0; i < prefixes.size(); ++i)
        if (i != best && !R.prefix_le(prefixes[i], prefixes[best]))
            throw Error(ErrorKind::InternalInconsistency, "common prefixes have no maximum");
    SWord out;
    for (int i = 0; i < K; ++i) out = Reverser::cat(out, Reverser::inv(d));
    return Reverser::cat(out, prefixes[best]);
}

// Simple elements as the exhaustively enumerated prefixes of Δ.
inline std::vector<SWord> enumerate_simples(const Reverser& R, std::size_t limit = 100000) {
    SWord d = R.delta_word();
    return common_prefixes(R, d, d, limit);
}

struct BallElement {
    SWord word;       // a shortest signed word found
    Element element;  // engine canonical form, used for deduplication only
};

inline std::vector<BallElement> ball(const ContextPtr& ctx, int radius, std::size_t limit = 200000) {
    std::vector<BallElement> out{{SWord{}, identity(ctx)}};
    std::unordered_set<Element> seen{out.front().element};
    std::size_t begin = 0;
    for (int r = 0; r < radius; ++r) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (int s = 1; s <= ctx->rank(); ++s)
                for (int sign : {1, -1}) {
                    SWord w = Reverser::cat(out[i].word, {sign * s});
                    Element e = out[i].element * generator(ctx, s - 1, sign < 0);
                    if (seen.insert(e).second) {
                        out.push_back({w, e});
                        if (out.size() > limit) throw Error(ErrorKind::BudgetExceeded, "ball too large");
                    }
                }
        begin = end;
    }
    return out;
}

struct OracleParabolic {
    SWord conjugator;
    GeneratorSet base;
    ParabolicSubgroup engine;  // for comparison only
};

inline OracleParabolic from_engine(const ParabolicSubgroup& P) {
    return {word_of(P.standardizer()), P.base(), P};
}

inline bool member(const Reverser& R, const OracleParabolic& P, const SWord& u) {
    return R.member(P.conjugator, P.base, u);
}

// Q ⊆ P, checked on the generators g·s·g⁻¹ of Q.
inline bool subgroup_le(const Reverser& R, const OracleParabolic& Q, const OracleParabolic& P) {
    for (int s : Q.base.members()) {
        SWord gen = Reverser::cat(Reverser::cat(Q.conjugator, {s + 1}), Reverser::inv(Q.conjugator));
        if (!member(R, P, gen)) return false;
    }
    return true;
}

inline std::vector<OracleParabolic> enumerate_parabolics(const ContextPtr& ctx, int conjugator_bound) {
    std::vector<OracleParabolic> out;
    std::unordered_set<Element> keys;
    auto gs = ball(ctx, conjugator_bound);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << ctx->rank()); ++m)
        for (const auto& g : gs) {
            ParabolicSubgroup P(g.element, GeneratorSet(m));
            if (keys.insert(P.z()).second) out.push_back({g.word, GeneratorSet(m), P});
        }
    return out;
}

// Minimal enumerated parabolic containing u.
inline OracleParabolic closure_oracle(const Reverser& R, const SWord& u, const std::vector<OracleParabolic>& items) {
    std::vector<const OracleParabolic*> containing;
    for (const auto& P : items)
        if (member(R, P, u)) containing.push_back(&P);
    std::stable_sort(containing.begin(), containing.end(),
                     [](const auto* a, const auto* b) { return a->base.size() < b->base.size(); });
    for (const auto* cand : containing) {
        bool below_all = true;
        for (const auto* other : containing)
            if (cand != other && !subgroup_le(R, *cand, *other)) {
                below_all = false;
                break;
            }
        if (below_all) return *cand;
    }
    throw Error(ErrorKind::NoMinimumFound, "no minimal enumerated parabolic contains the element");
}

// Indices of ball elements lying in both P and Q.
inline std::vector<std::size_t> intersect_oracle(const Reverser& R, const OracleParabolic& P,
                                                 const OracleParabolic& Q, const std::vector<BallElement>& B) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < B.size(); ++i)
        if (member(R, P, B[i].word) && member(R, Q, B[i].word)) out.push_back(i);
    return out;
}

}  // namespace artin::oracle
