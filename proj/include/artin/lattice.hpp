#pragma once

// Adjacency of parabolic subgroups, intersections and joins by certified bounded
// search, and balls in the complex of irreducible parabolic subgroups.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "artin/parabolic.hpp"

namespace artin {

// Elements of A_X given by signed words over X of length ≤ radius, in BFS order.
inline std::vector<Element> enumerate_ball(const ContextPtr& ctx, GeneratorSet X, int radius) {
    std::vector<Element> out{identity(ctx)};
    std::unordered_set<Element> seen{out.front()};
    std::vector<Element> gens;
    for (int s : X.members()) {
        gens.push_back(generator(ctx, s));
        gens.push_back(generator(ctx, s, true));
    }
    std::size_t begin = 0;
    for (int r = 0; r < radius; ++r) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& g : gens) {
                Element e = out[i] * g;
                if (seen.insert(e).second) out.push_back(e);
            }
        begin = end;
    }
    return out;
}

// All g·A_X·g⁻¹ with |g| ≤ bound and X ⊆ S accepted by the filter, deduplicated by z and sorted.
template <class Filter>
inline std::vector<ParabolicSubgroup> enumerate_conjugate_parabolics(const ContextPtr& ctx, int bound, Filter keep) {
    std::vector<ParabolicSubgroup> out;
    std::unordered_set<Element> keys;
    auto ball = enumerate_ball(ctx, ctx->all(), bound);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << ctx->rank()); ++m) {
        GeneratorSet X(m);
        if (!keep(X)) continue;
        for (const auto& g : ball) {
            ParabolicSubgroup P(g, X);
            if (keys.insert(P.z()).second) out.push_back(P);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool z_commute(const ParabolicSubgroup& P, const ParabolicSubgroup& Q) {
    require_same_context(P.z(), Q.z());
    return P.z() * Q.z() == Q.z() * P.z();
}

struct Certificate {
    std::optional<Element> witness;
    int budget = 0;
    bool z_in_p = false, z_in_q = false;  // verified inclusions of the result
    std::size_t searched = 0;
    std::size_t found = 0;    // common elements (intersect) or containing candidates (join)
    bool complete = false;    // every found element / candidate is consistent with the result
    std::string method;
    bool verified() const { return z_in_p && z_in_q && complete; }
};

struct LatticeResult {
    ParabolicSubgroup result;
    Certificate certificate;
};

inline LatticeResult intersect(const ParabolicSubgroup& P, const ParabolicSubgroup& Q, int budget,
                               const SummitOptions& opt = {}) {
    require_same_context(P.z(), Q.z());
    const auto& ctx = P.context_ptr();
    auto finish = [&](ParabolicSubgroup R, std::string method) {
        Certificate c;
        c.budget = budget;
        c.method = std::move(method);
        c.z_in_p = contains_subgroup(P, R);
        c.z_in_q = contains_subgroup(Q, R);
        c.complete = true;
        return LatticeResult{std::move(R), std::move(c)};
    };
    if (P.is_trivial() || Q.is_trivial()) return finish(trivial_parabolic(ctx), "trivial operand");
    if (contains_subgroup(Q, P)) return finish(P, "P contained in Q");
    if (contains_subgroup(P, Q)) return finish(Q, "Q contained in P");

    const ParabolicSubgroup& A = P.base().size() <= Q.base().size() ? P : Q;
    const ParabolicSubgroup& B = (&A == &P) ? Q : P;
    Element b = A.standardizer(), binv = inverse(b);
    auto ball = enumerate_ball(ctx, A.base(), budget);
    std::vector<Element> common;
    for (const auto& w : ball) {
        if (w.is_identity()) continue;
        Element a = b * w * binv;
        if (contains_element(B, a)) common.push_back(a);
    }
    Certificate c;
    c.budget = budget;
    c.searched = ball.size();
    c.found = common.size();
    c.method = "maximal phi search";
    if (common.empty()) {
        LatticeResult r = finish(trivial_parabolic(ctx), "no common element within budget");
        r.certificate.searched = ball.size();
        return r;
    }
    std::vector<std::pair<int, std::size_t>> scored;
    for (std::size_t i = 0; i < common.size(); ++i) scored.push_back({-phi(common[i], opt), i});
    std::sort(scored.begin(), scored.end(), [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return common[x.second] < common[y.second];
    });
    const Element& best = common[scored.front().second];
    ParabolicSubgroup R = parabolic_closure(best, opt);
    c.witness = best;
    c.z_in_p = contains_subgroup(P, R);
    c.z_in_q = contains_subgroup(Q, R);
    c.complete = std::all_of(common.begin(), common.end(), [&](const Element& a) { return contains_element(R, a); });
    return {R, c};
}

inline LatticeResult join(const ParabolicSubgroup& P, const ParabolicSubgroup& Q, int budget,
                          const SummitOptions& opt = {}) {
    require_same_context(P.z(), Q.z());
    const auto& ctx = P.context_ptr();
    auto holds = [&](const ParabolicSubgroup& T) { return contains_subgroup(T, P) && contains_subgroup(T, Q); };
    auto certify = [&](ParabolicSubgroup R, const std::vector<ParabolicSubgroup>& cands, std::string method) {
        Certificate c;
        c.budget = budget;
        c.method = std::move(method);
        c.z_in_p = contains_subgroup(R, P);
        c.z_in_q = contains_subgroup(R, Q);
        c.found = cands.size();
        c.complete = std::all_of(cands.begin(), cands.end(), [&](const auto& T) { return contains_subgroup(T, R); });
        return LatticeResult{std::move(R), std::move(c)};
    };
    if (contains_subgroup(Q, P)) return certify(Q, {}, "P contained in Q");
    if (contains_subgroup(P, Q)) return certify(P, {}, "Q contained in P");

    std::vector<ParabolicSubgroup> cands;
    for (int k : {1, -1, 2, -2}) {
        ParabolicSubgroup T = parabolic_closure(P.z() * power(Q.z(), k), opt);
        if (holds(T)) cands.push_back(T);
    }
    for (auto& T : enumerate_conjugate_parabolics(ctx, budget, [](GeneratorSet) { return true; }))
        if (holds(T)) cands.push_back(T);
    std::sort(cands.begin(), cands.end(), [&](const auto& x, const auto& y) {
        int lx = ctx->delta_length(x.base()), ly = ctx->delta_length(y.base());
        if (lx != ly) return lx < ly;
        return x < y;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    // Intersections of containing subgroups still contain P and Q; shrink until every candidate contains R.
    ParabolicSubgroup R = standard_parabolic(ctx, ctx->all());
    if (!cands.empty()) R = cands.front();
    for (const auto& T : cands) {
        if (contains_subgroup(T, R)) continue;
        LatticeResult m = intersect(R, T, budget, opt);
        if (holds(m.result)) R = m.result;
    }
    return certify(R, cands, "closure candidates and enumerated subgroups");
}

// --- adjacency -------------------------------------------------------------

enum class AdjacencyCondition { ProperSubset_PQ, ProperSubset_QP, DisjointCommuting };

inline const char* to_string(AdjacencyCondition c) {
    switch (c) {
        case AdjacencyCondition::ProperSubset_PQ: return "ProperSubset_PQ";
        case AdjacencyCondition::ProperSubset_QP: return "ProperSubset_QP";
        case AdjacencyCondition::DisjointCommuting: return "DisjointCommuting";
    }
    return "?";
}

struct AdjacencyVerdict {
    bool commute = false;
    std::optional<AdjacencyCondition> condition;
};

struct PairConditions {
    bool p_in_q = false;         // P ⊊ Q
    bool q_in_p = false;         // Q ⊊ P
    bool disjoint_commuting = false;
    int count() const { return int(p_in_q) + int(q_in_p) + int(disjoint_commuting); }
};

inline PairConditions pair_conditions(const ParabolicSubgroup& P, const ParabolicSubgroup& Q, int budget,
                                      const SummitOptions& opt = {}) {
    PairConditions c;
    bool distinct = !(P == Q);
    c.p_in_q = distinct && contains_subgroup(Q, P);
    c.q_in_p = distinct && contains_subgroup(P, Q);
    if (!c.p_in_q && !c.q_in_p) {
        bool gens_commute = true;
        auto gp = parabolic_generators(P), gq = parabolic_generators(Q);
        for (const auto& x : gp)
            for (const auto& y : gq) gens_commute = gens_commute && (x * y == y * x);
        c.disjoint_commuting = gens_commute && intersect(P, Q, budget, opt).result.is_trivial();
    }
    return c;
}

inline void require_proper_irreducible(const ParabolicSubgroup& P) {
    if (!P.is_proper()) throw Error(ErrorKind::NotProper, "parabolic subgroup is the whole group");
    if (!P.is_irreducible()) throw Error(ErrorKind::NotIrreducible, "parabolic subgroup is not irreducible");
}

inline AdjacencyVerdict characterize_pair(const ParabolicSubgroup& P, const ParabolicSubgroup& Q, int budget = 4,
                                          const SummitOptions& opt = {}) {
    require_same_context(P.z(), Q.z());
    require_proper_irreducible(P);
    require_proper_irreducible(Q);
    if (P == Q) throw Error(ErrorKind::EqualSubgroups, "characterize_pair needs distinct subgroups");
    AdjacencyVerdict v;
    v.commute = z_commute(P, Q);
    PairConditions c = pair_conditions(P, Q, budget, opt);
    if (c.p_in_q) v.condition = AdjacencyCondition::ProperSubset_PQ;
    else if (c.q_in_p) v.condition = AdjacencyCondition::ProperSubset_QP;
    else if (c.disjoint_commuting) v.condition = AdjacencyCondition::DisjointCommuting;
    if (v.commute != (c.count() == 1) || c.count() > 1)
        throw Error(ErrorKind::InternalInconsistency, "z-commutation disagrees with the adjacency conditions");
    return v;
}

// --- the complex of irreducible parabolic subgroups ------------------------

inline std::vector<ParabolicSubgroup> complex_neighbors(const ParabolicSubgroup& P, int budget) {
    require_proper_irreducible(P);
    const auto& ctx = P.context_ptr();
    auto irreducible_proper = [&](GeneratorSet Y) {
        return !Y.empty() && !(Y == ctx->all()) && ctx->is_irreducible(Y);
    };
    std::vector<ParabolicSubgroup> out;
    for (auto& Q : enumerate_conjugate_parabolics(ctx, budget, irreducible_proper))
        if (!(Q == P) && z_commute(P, Q)) out.push_back(Q);
    return out;
}

struct ComplexBall {
    ParabolicSubgroup center;
    int radius = 0;
    std::vector<ParabolicSubgroup> vertices;            // sorted; includes the center
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline ComplexBall complex_ball(const ParabolicSubgroup& P, int radius, int budget) {
    require_proper_irreducible(P);
    ComplexBall ball{P, radius, {P}, {}};
    std::vector<ParabolicSubgroup> frontier{P};
    std::set<ParabolicSubgroup> seen{P};
    for (int r = 0; r < radius; ++r) {
        std::vector<ParabolicSubgroup> next;
        for (const auto& Q : frontier)
            for (auto& R : complex_neighbors(Q, budget))
                if (seen.insert(R).second) next.push_back(R);
        ball.vertices.insert(ball.vertices.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(ball.vertices.begin(), ball.vertices.end());
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < ball.vertices.size(); ++j)
            if (z_commute(ball.vertices[i], ball.vertices[j])) ball.edges.push_back({i, j});
    return ball;
}

// Whether both positive words contain the path s_0…s_k as a subsequence.
inline bool subsequence_invariance_check(const ContextPtr& ctx, const std::vector<int>& w1, const std::vector<int>& w2,
                                         const std::vector<int>& path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] < 0 || path[i] >= ctx->rank()) throw Error(ErrorKind::InvalidPath, "letter out of range");
        if (i + 1 < path.size() && ctx->commute(path[i], path[i + 1]))
            throw Error(ErrorKind::InvalidPath, "consecutive path letters commute");
        if (i + 2 < path.size() && path[i] == path[i + 2])
            throw Error(ErrorKind::InvalidPath, "path letters s_i and s_{i+2} coincide");
    }
    auto contains = [&](const std::vector<int>& w) {
        std::size_t k = 0;
        for (int s : w)
            if (k < path.size() && s == path[k]) ++k;
        return k == path.size();
    };
    return contains(w1) && contains(w2);
}

}  // namespace artin
