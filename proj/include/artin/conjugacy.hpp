#pragma once

// Cycling, decycling, summit sets C⁺/SSS/USS/RSSS/SU with their minimal-conjugator
// graphs, the I_∞ procedure and the transport map.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "artin/garside.hpp"
#include "artin/ribbon.hpp"

namespace artin {

enum class SummitKind { PositiveConjugates, SSS, USS, RSSS, SU };

inline const char* to_string(SummitKind k) {
    switch (k) {
        case SummitKind::PositiveConjugates: return "pos";
        case SummitKind::SSS: return "sss";
        case SummitKind::USS: return "uss";
        case SummitKind::RSSS: return "rsss";
        case SummitKind::SU: return "su";
    }
    return "?";
}

inline SummitKind parse_summit_kind(const std::string& s) {
    if (s == "pos" || s == "positive") return SummitKind::PositiveConjugates;
    if (s == "sss") return SummitKind::SSS;
    if (s == "uss") return SummitKind::USS;
    if (s == "rsss") return SummitKind::RSSS;
    if (s == "su") return SummitKind::SU;
    throw Error(ErrorKind::ParseError, "unknown summit kind '" + s + "'");
}

struct SummitOptions {
    int su_power_bound = 4;
    int stabilization_window = 3;
    int max_exponent = 64;
    std::size_t max_vertices = 100000;
    std::size_t max_orbit = 100000;
};

// result = conjugator⁻¹·α·conjugator
struct Conjugation {
    Element result;
    Element conjugator;
};

inline Element initial_factor(const Element& a, const GarsideStructure& st) {
    StructuredForm f = left_normal_form(a, st);
    if (f.factors.empty()) return identity(a.context_ptr());
    return st.tau(f.factors.front(), f.power);
}

inline Element final_factor(const Element& a, const GarsideStructure& st) {
    StructuredForm f = left_normal_form(a, st);
    if (f.factors.empty()) return identity(a.context_ptr());
    return f.factors.back();
}

inline Conjugation cycling(const Element& a, const GarsideStructure& st) {
    Element i = initial_factor(a, st);
    return {conjugate(a, i), i};
}

inline Conjugation decycling(const Element& a, const GarsideStructure& st) {
    Element last = final_factor(a, st);
    Element c = inverse(last);
    return {conjugate(a, c), c};
}

inline Conjugation twisted_cycling(const Element& a, const GarsideStructure& st) {
    if (canonical_length_n(a, st.exponent()) == 0) return {a, identity(a.context_ptr())};
    Element c = initial_factor(a, st) * st.garside_power(-1);
    return {conjugate(a, c), c};
}

// C_m(α): product of the first m cycling conjugators.
inline Element iterated_cycling_conjugator(const Element& a, long long m, const GarsideStructure& st) {
    Element cur = a, prod = identity(a.context_ptr());
    for (long long i = 0; i < m; ++i) {
        Conjugation c = cycling(cur, st);
        prod = prod * c.conjugator;
        cur = c.result;
    }
    return prod;
}

struct Extremes {
    long long inf = 0, sup = 0;
};

namespace detail {

// Iterated cycling until inf_N stops increasing, then iterated decycling until sup_N stops
// decreasing. A phase stops at the first repetition, or after ‖Δ^N‖−1 steps without progress.
inline Conjugation iterate_to_sss(const Element& a, const GarsideStructure& st, const SummitOptions& opt) {
    const int N = st.exponent();
    const long long stall_bound = static_cast<long long>(N) * a.context().delta().length() - 1;
    Element cur = a, conj = identity(a.context_ptr());
    auto run = [&](bool cyc) {
        std::unordered_set<Element> seen{cur};
        long long best = cyc ? inf_n(cur, N) : -sup_n(cur, N);
        long long stall = 0;
        for (std::size_t it = 0; it < opt.max_orbit; ++it) {
            if (canonical_length_n(cur, N) == 0) return;
            Conjugation c = cyc ? cycling(cur, st) : decycling(cur, st);
            conj = conj * c.conjugator;
            cur = c.result;
            long long val = cyc ? inf_n(cur, N) : -sup_n(cur, N);
            if (val > best) {
                best = val;
                seen = {cur};
                stall = 0;
                continue;
            }
            if (!seen.insert(cur).second || ++stall > stall_bound) return;
        }
        throw Error(ErrorKind::BudgetExceeded, "cycling orbit too long");
    };
    run(true);
    run(false);
    return {cur, conj};
}

// Applies f until the first repeated element; returns the repeated (periodic) element.
template <class F>
inline Conjugation iterate_to_periodic(const Element& a, F step, const SummitOptions& opt) {
    std::vector<Element> seq{a};
    std::vector<Element> conj{identity(a.context_ptr())};
    std::unordered_map<Element, std::size_t> pos{{a, 0}};
    for (std::size_t it = 0; it < opt.max_orbit; ++it) {
        Conjugation c = step(seq.back());
        auto found = pos.find(c.result);
        if (found != pos.end()) return {seq[found->second], conj[found->second]};
        conj.push_back(conj.back() * c.conjugator);
        seq.push_back(c.result);
        pos.emplace(c.result, seq.size() - 1);
    }
    throw Error(ErrorKind::BudgetExceeded, "orbit too long");
}

template <class F>
inline bool is_periodic(const Element& a, F step, const SummitOptions& opt) {
    std::unordered_set<Element> seen{a};
    Element cur = a;
    for (std::size_t it = 0; it < opt.max_orbit; ++it) {
        cur = step(cur).result;
        if (cur == a) return true;
        if (!seen.insert(cur).second) return false;
    }
    throw Error(ErrorKind::BudgetExceeded, "orbit too long");
}

}  // namespace detail

inline Extremes summit_extremes(const Element& a, const GarsideStructure& st, const SummitOptions& opt = {}) {
    Element b = detail::iterate_to_sss(a, st, opt).result;
    return {inf_n(b, st.exponent()), sup_n(b, st.exponent())};
}

inline bool cycling_periodic(const Element& a, const GarsideStructure& st, const SummitOptions& opt = {}) {
    return detail::is_periodic(a, [&](const Element& x) { return cycling(x, st); }, opt);
}

inline bool decycling_periodic(const Element& a, const GarsideStructure& st, const SummitOptions& opt = {}) {
    return detail::is_periodic(a, [&](const Element& x) { return decycling(x, st); }, opt);
}

// Membership predicate for the summit set of the conjugacy class of a fixed element.
class SummitMembership {
public:
    SummitMembership(const Element& representative, SummitKind kind, GarsideStructure st, SummitOptions opt = {})
        : rep_(representative), kind_(kind), st_(std::move(st)), opt_(opt) {}

    SummitKind kind() const { return kind_; }
    const GarsideStructure& structure() const { return st_; }

    bool contains(const Element& b) const {
        switch (kind_) {
            case SummitKind::PositiveConjugates: return b.inf() >= 0;
            case SummitKind::SSS: return in_sss(b, 1);
            case SummitKind::USS: return in_uss(b, 1);
            case SummitKind::RSSS: return in_uss(b, 1) && decycling_periodic(b, st_, opt_);
            case SummitKind::SU:
                for (int m = 1; m <= opt_.su_power_bound; ++m)
                    if (!in_uss(power(b, m), m) || !in_uss(power(b, -m), -m)) return false;
                return true;
        }
        return false;
    }

    // Extremes of the class of rep^m.
    const Extremes& extremes(int m = 1) const {
        auto it = ext_.find(m);
        if (it == ext_.end()) it = ext_.emplace(m, summit_extremes(power(rep_, m), st_, opt_)).first;
        return it->second;
    }

    bool in_sss(const Element& b, int m) const {
        const Extremes& e = extremes(m);
        return inf_n(b, st_.exponent()) == e.inf && sup_n(b, st_.exponent()) == e.sup;
    }
    bool in_uss(const Element& b, int m) const { return in_sss(b, m) && cycling_periodic(b, st_, opt_); }

private:
    Element rep_;
    SummitKind kind_;
    GarsideStructure st_;
    SummitOptions opt_;
    mutable std::map<int, Extremes> ext_;
};

inline Conjugation conjugate_to_uss(const Element& a, const GarsideStructure& st, const SummitOptions& opt = {}) {
    Conjugation s = detail::iterate_to_sss(a, st, opt);
    Conjugation u = detail::iterate_to_periodic(s.result, [&](const Element& x) { return cycling(x, st); }, opt);
    return {u.result, s.conjugator * u.conjugator};
}

// Conjugates α into the summit set of the given kind; returns α unchanged if already there.
inline Conjugation conjugate_into(const Element& a, SummitKind kind, const GarsideStructure& st,
                                  const SummitOptions& opt = {}) {
    const auto& ctx = a.context_ptr();
    SummitMembership mem(a, kind, st, opt);
    if (mem.contains(a)) return {a, identity(ctx)};
    switch (kind) {
        case SummitKind::PositiveConjugates: {
            Conjugation s = detail::iterate_to_sss(a, GarsideStructure(ctx, 1), opt);
            if (s.result.inf() < 0) throw Error(ErrorKind::EmptySet, "element has no positive conjugate");
            return s;
        }
        case SummitKind::SSS: return detail::iterate_to_sss(a, st, opt);
        case SummitKind::USS: return conjugate_to_uss(a, st, opt);
        case SummitKind::RSSS: {
            Conjugation c = conjugate_to_uss(a, st, opt);
            for (std::size_t it = 0; it < opt.max_orbit; ++it) {
                if (mem.contains(c.result)) return c;
                Conjugation d = detail::iterate_to_periodic(
                    c.result, [&](const Element& x) { return decycling(x, st); }, opt);
                c = {d.result, c.conjugator * d.conjugator};
                if (mem.contains(c.result)) return c;
                Conjugation u = detail::iterate_to_periodic(
                    c.result, [&](const Element& x) { return cycling(x, st); }, opt);
                c = {u.result, c.conjugator * u.conjugator};
            }
            throw Error(ErrorKind::BudgetExceeded, "RSSS search did not settle");
        }
        case SummitKind::SU: {
            Conjugation c = conjugate_into(a, SummitKind::RSSS, st, opt);
            for (std::size_t it = 0; it < opt.max_orbit; ++it) {
                bool changed = false;
                for (int k = 1; k <= opt.su_power_bound; ++k) {
                    for (int m : {k, -k}) {
                        Element y = power(c.result, m);
                        if (mem.in_uss(y, m)) continue;
                        Conjugation u = conjugate_to_uss(y, st, opt);
                        c = {conjugate(c.result, u.conjugator), c.conjugator * u.conjugator};
                        changed = true;
                    }
                }
                if (!changed) return c;
            }
            throw Error(ErrorKind::BudgetExceeded, "SU search did not settle");
        }
    }
    return {a, identity(ctx)};
}

// --- summit graphs ---------------------------------------------------------

struct Arrow {
    std::size_t from = 0, to = 0;
    Element label;
};

struct SummitGraph {
    SummitKind kind = SummitKind::SSS;
    int exponent = 1;
    int su_power_bound = 0;
    Element input;
    std::vector<Element> vertices;
    std::vector<Arrow> arrows;
    std::vector<Element> witnesses;  // witnesses[i]⁻¹·input·witnesses[i] = vertices[i]

    std::optional<std::size_t> index_of(const Element& v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || !(*it == v)) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }
};

namespace detail {

// Least x ≽ s with v^x positive: fixed point of x ↦ v⁻¹(x ∨ vx).
inline Element rho_positive(const Element& v, const Element& s) {
    Element vinv = inverse(v), x = s;
    while (true) {
        Element nx = vinv * join_prefix(x, v * x);
        if (nx == x) return x;
        x = nx;
    }
}

// Least x ≽ s with inf_N(v^x) ≥ p and sup_N(v^x) ≤ q.
inline Element rho_sss(const Element& v, const Element& s, const GarsideStructure& st, long long p, long long q) {
    Element vinv = inverse(v), x = s;
    Element Dp = st.garside_power(p), Dmq = st.garside_power(-q);
    while (true) {
        Element x1 = vinv * join_prefix(x * Dp, v * x);
        Element x2 = join_prefix(x1, v * x1 * Dmq);
        if (x2 == x) return x;
        x = x2;
    }
}

inline std::vector<Element> minimal_elements(std::vector<Element> cands) {
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Element> out;
    for (const auto& x : cands) {
        bool minimal = true;
        for (const auto& y : cands)
            if (!(y == x) && prefix_le(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return out;
}

template <class Labels>
inline SummitGraph explore(const Element& input, const Conjugation& seed, Labels labels, SummitKind kind,
                           const GarsideStructure& st, const SummitOptions& opt) {
    std::vector<Element> verts{seed.result}, wit{seed.conjugator};
    std::unordered_map<Element, std::size_t> index{{seed.result, 0}};
    std::vector<std::tuple<std::size_t, std::size_t, Element>> raw;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        Element v = verts[i];
        for (const Element& x : labels(v)) {
            Element w = conjugate(v, x);
            auto [it, fresh] = index.emplace(w, verts.size());
            if (fresh) {
                if (verts.size() >= opt.max_vertices) throw Error(ErrorKind::BudgetExceeded, "summit set too large");
                verts.push_back(w);
                wit.push_back(wit[i] * x);
            }
            raw.emplace_back(i, it->second, x);
        }
    }
    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return verts[a] < verts[b]; });
    std::vector<std::size_t> rank(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    SummitGraph g;
    g.kind = kind;
    g.exponent = st.exponent();
    g.su_power_bound = kind == SummitKind::SU ? opt.su_power_bound : 0;
    g.input = input;
    for (std::size_t i : order) {
        g.vertices.push_back(verts[i]);
        g.witnesses.push_back(wit[i]);
    }
    for (auto& [a, b, x] : raw) g.arrows.push_back({rank[a], rank[b], x});
    std::sort(g.arrows.begin(), g.arrows.end(), [](const Arrow& a, const Arrow& b) {
        if (a.from != b.from) return a.from < b.from;
        return a.label < b.label;
    });
    return g;
}

}  // namespace detail

// Minimal positive conjugators of v inside C⁺ (v positive) or SSS_N (v in SSS_N).
inline std::vector<Element> minimal_conjugators(const Element& v, SummitKind kind, const GarsideStructure& st) {
    const auto& ctx = v.context_ptr();
    std::vector<Element> rhos;
    long long p = inf_n(v, st.exponent()), q = sup_n(v, st.exponent());
    for (int s = 0; s < ctx->rank(); ++s) {
        Element g = generator(ctx, s);
        rhos.push_back(kind == SummitKind::PositiveConjugates ? detail::rho_positive(v, g)
                                                              : detail::rho_sss(v, g, st, p, q));
    }
    return detail::minimal_elements(std::move(rhos));
}

inline SummitGraph compute_summit_graph(const Element& a, SummitKind kind, const GarsideStructure& st,
                                        const SummitOptions& opt = {}) {
    if (kind == SummitKind::PositiveConjugates || kind == SummitKind::SSS) {
        Conjugation seed = conjugate_into(a, kind, st, opt);
        return detail::explore(
            a, seed, [&](const Element& v) { return minimal_conjugators(v, kind, st); }, kind, st, opt);
    }
    // USS/RSSS/SU: minimal conjugators are found among simple conjugators that factor
    // through arrows of the SSS graph.
    SummitGraph sss = compute_summit_graph(a, SummitKind::SSS, st, opt);
    SummitMembership mem(a, kind, st, opt);
    std::vector<char> member(sss.vertices.size());
    for (std::size_t i = 0; i < sss.vertices.size(); ++i) member[i] = mem.contains(sss.vertices[i]);
    std::vector<std::vector<const Arrow*>> out(sss.vertices.size());
    for (const auto& ar : sss.arrows) out[ar.from].push_back(&ar);
    const int N = st.exponent();
    auto labels = [&](const Element& v) {
        std::size_t start = *sss.index_of(v);
        std::unordered_set<Element> seen{identity(a.context_ptr())};
        std::vector<std::pair<Element, std::size_t>> stack{{identity(a.context_ptr()), start}};
        std::vector<Element> cands;
        while (!stack.empty()) {
            auto [x, u] = stack.back();
            stack.pop_back();
            for (const Arrow* ar : out[u]) {
                Element nx = x * ar->label;
                if (nx.sup() > N || !seen.insert(nx).second) continue;
                if (member[ar->to]) cands.push_back(nx);
                else stack.emplace_back(nx, ar->to);
            }
        }
        return detail::minimal_elements(std::move(cands));
    };
    Conjugation seed = conjugate_into(a, kind, st, opt);
    SummitGraph g = detail::explore(a, seed, labels, kind, st, opt);
    std::size_t expected = std::count(member.begin(), member.end(), 1);
    if (g.vertices.size() != expected)
        throw Error(ErrorKind::InternalInconsistency, "summit subgraph is not connected");
    return g;
}

// --- I_∞ -------------------------------------------------------------------

struct IInfinityResult {
    Element element;
    Element conjugator;
    int nstar = 1;  // element unchanged from this exponent on
    bool stabilized = false;
};

inline IInfinityResult element_of_I_infinity(const Element& a, SummitKind kind, const SummitOptions& opt = {}) {
    if (kind == SummitKind::PositiveConjugates)
        throw Error(ErrorKind::InvalidSpec, "I_infinity is defined for SSS, USS, RSSS and SU");
    const auto& ctx = a.context_ptr();
    Element cur = a, conj = identity(ctx);
    int stable = 0, since = 1;
    for (int N = 1; N <= opt.max_exponent; ++N) {
        Conjugation c = conjugate_into(cur, kind, GarsideStructure(ctx, N), opt);
        bool changed = !(c.result == cur);
        conj = conj * c.conjugator;
        cur = c.result;
        if (changed) {
            stable = 0;
            since = N;
        } else if (N > cur.canonical_length()) {
            ++stable;
        }
        if (stable >= opt.stabilization_window) return {cur, conj, since, true};
    }
    return {cur, conj, since, false};
}

// --- transport ---------------------------------------------------------------

struct TransportRecord {
    Element v, w, x;  // x is the positive conjugator actually transported
    int period = 0;
    std::vector<Element> v_iterates, w_iterates, x_iterates;  // index i holds the i-th transport
};

// Smallest power of Δ_S that is central.
inline Element central_delta(const ContextPtr& ctx) { return delta_power(ctx, ctx->tau_trivial() ? 1 : 2); }

inline TransportRecord transport_orbit(const Element& v, const Element& w, const Element& x, const GarsideStructure& st,
                                       const SummitOptions& opt = {}) {
    if (!(conjugate(v, x) == w)) throw Error(ErrorKind::NotConjugating, "x⁻¹vx ≠ w");
    SummitMembership mem(v, SummitKind::USS, st, opt);
    if (!mem.contains(v) || !mem.contains(w)) throw Error(ErrorKind::NotInUSS, "transport needs USS elements");
    Element xp = x, z = central_delta(v.context_ptr());
    while (!xp.is_positive()) xp = xp * z;
    TransportRecord rec{v, w, xp, 0, {v}, {w}, {xp}};
    Element cv = v, cw = w, cx = xp;
    for (std::size_t i = 1; i <= opt.max_orbit; ++i) {
        Element iv = initial_factor(cv, st), iw = initial_factor(cw, st);
        cx = inverse(iv) * cx * iw;
        cv = conjugate(cv, iv);
        cw = conjugate(cw, iw);
        rec.v_iterates.push_back(cv);
        rec.w_iterates.push_back(cw);
        rec.x_iterates.push_back(cx);
        if (cv == v && cw == w && cx == xp) {
            rec.period = static_cast<int>(i);
            return rec;
        }
    }
    throw Error(ErrorKind::BudgetExceeded, "transport orbit did not close");
}

struct StableTwistedConjugator {
    long long M = 0;
    Element twisted_v, twisted_w;  // C̃_M(v), C̃_M(w)
    bool conjugation_holds = false, commutes_v = false, commutes_w = false;
};

inline StableTwistedConjugator stable_twisted_conjugator(const Element& v, const Element& w, const Element& x,
                                                         const GarsideStructure& st, const SummitOptions& opt = {}) {
    TransportRecord rec = transport_orbit(v, w, x, st, opt);
    const auto& ctx = v.context_ptr();
    long long k = 1;
    while (!ctx->tau_trivial() && (static_cast<long long>(st.exponent()) * k * rec.period) % 2 != 0) ++k;
    StableTwistedConjugator out;
    out.M = k * rec.period;
    Element back = st.garside_power(-out.M);
    out.twisted_v = iterated_cycling_conjugator(v, out.M, st) * back;
    out.twisted_w = iterated_cycling_conjugator(w, out.M, st) * back;
    out.conjugation_holds = conjugate(out.twisted_v, x) == out.twisted_w;
    out.commutes_v = out.twisted_v * v == v * out.twisted_v;
    out.commutes_w = out.twisted_w * w == w * out.twisted_w;
    return out;
}

// --- arrow classification in C⁺ graphs ---------------------------------------

enum class ArrowType { InsideA_X, CommutingLetter, Ribbon };

inline const char* to_string(ArrowType t) {
    switch (t) {
        case ArrowType::InsideA_X: return "InsideA_X";
        case ArrowType::CommutingLetter: return "CommutingLetter";
        case ArrowType::Ribbon: return "Ribbon";
    }
    return "?";
}

struct ArrowClass {
    ArrowType type;
    int letter = -1;  // t for the last two types
};

inline ArrowClass classify_arrow(const Element& v, const Element& label) {
    const auto& ctx = v.context_ptr();
    if (!v.is_positive() || !label.is_positive())
        throw Error(ErrorKind::UnclassifiableLabel, "classification needs positive vertex and label");
    GeneratorSet X = support(v);
    std::vector<ArrowClass> hits;
    if (support(label).subset_of(X)) hits.push_back({ArrowType::InsideA_X, -1});
    for (int t : (ctx->all() - X).members()) {
        bool commutes = true;
        for (int s : X.members()) commutes = commutes && ctx->commute(s, t);
        if (commutes && label == generator(ctx, t)) hits.push_back({ArrowType::CommutingLetter, t});
        if (!commutes && label == ribbon(ctx, X, t)) hits.push_back({ArrowType::Ribbon, t});
    }
    if (hits.size() != 1)
        throw Error(ErrorKind::UnclassifiableLabel,
                    hits.empty() ? "label fits none of the three types" : "label fits several types");
    return hits.front();
}

}  // namespace artin
