// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "artin/artin.hpp"
#include "artin/io.hpp"
#include "artin/oracle.hpp"

using namespace artin;
using oracle::Reverser;
using oracle::SWord;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no time limit
    std::function<Outcome()> run;
};

Element el(const ContextPtr& ctx, const std::string& w) { return io::parse_element(ctx, w); }

Word random_word(std::mt19937& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), g(0, rank - 1), sign(0, 1);
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back({g(rng), sign(rng) == 1});
    return w;
}

std::string count_detail(long ok, long total, const std::string& what) {
    return std::to_string(ok) + "/" + std::to_string(total) + " " + what;
}

using ArrowKey = std::tuple<std::string, std::string, std::string>;

SummitGraph figure_graph() {
    static auto ctx = build_context("A4");
    return compute_summit_graph(el(ctx, "s1 s2"), SummitKind::PositiveConjugates, GarsideStructure(ctx, 1));
}

Outcome figure_one() {
    SummitGraph g = figure_graph();
    std::set<std::string> verts;
    for (const auto& v : g.vertices) verts.insert(io::format_word(to_word(v)));
    std::multiset<ArrowKey> arrows;
    for (const auto& a : g.arrows)
        arrows.insert({io::format_word(to_word(g.vertices[a.from])), io::format_word(to_word(g.vertices[a.to])),
                       io::format_positive(letters(a.label))});
    const std::set<std::string> want_v{"s1 s2", "s2 s3", "s3 s4", "s2 s1", "s3 s2", "s4 s3"};
    const std::multiset<ArrowKey> want_a{
        {"s1 s2", "s1 s2", "s4"},       {"s1 s2", "s2 s1", "s1"},       {"s1 s2", "s2 s3", "s3 s2 s1"},
        {"s2 s1", "s2 s1", "s4"},       {"s2 s1", "s1 s2", "s2"},       {"s2 s1", "s3 s2", "s3 s2 s1"},
        {"s2 s3", "s3 s2", "s2"},       {"s2 s3", "s1 s2", "s1 s2 s3"}, {"s2 s3", "s3 s4", "s4 s3 s2"},
        {"s3 s2", "s2 s3", "s3"},       {"s3 s2", "s2 s1", "s1 s2 s3"}, {"s3 s2", "s4 s3", "s4 s3 s2"},
        {"s3 s4", "s4 s3", "s3"},       {"s3 s4", "s3 s4", "s1"},       {"s3 s4", "s2 s3", "s2 s3 s4"},
        {"s4 s3", "s3 s4", "s4"},       {"s4 s3", "s4 s3", "s1"},       {"s4 s3", "s3 s2", "s2 s3 s4"}};
    Outcome o;
    o.pass = verts == want_v && arrows == want_a;
    o.detail = std::to_string(g.vertices.size()) + " vertices, " + std::to_string(g.arrows.size()) + " arrows";
    return o;
}

Outcome figure_two() {
    auto ctx = build_context("A4");
    SummitGraph g = figure_graph();
    std::set<Element> zs;
    long ok = 0;
    for (const auto& a : g.arrows) {
        Element zu = z_standard(ctx, support(g.vertices[a.from])), zv = z_standard(ctx, support(g.vertices[a.to]));
        zs.insert(zu);
        ok += conjugate(zu, a.label) == zv;
    }
    std::set<Element> want{el(ctx, "s1 s2 s1 s1 s2 s1"), el(ctx, "s2 s3 s2 s2 s3 s2"), el(ctx, "s3 s4 s3 s3 s4 s3")};
    ZActionGraph q = z_action_graph(g);
    Outcome o;
    o.pass = ok == static_cast<long>(g.arrows.size()) && zs == want && q.arrows.size() == 12;
    o.detail = count_detail(ok, static_cast<long>(g.arrows.size()), "arrows conjugate z") + ", " +
               std::to_string(q.arrows.size()) + " distinct z-arrows";
    return o;
}

Outcome classification() {
    SummitGraph g = figure_graph();
    std::map<ArrowType, int> counts;
    long ok = 0;
    for (const auto& a : g.arrows) {
        try {
            counts[classify_arrow(g.vertices[a.from], a.label).type]++;
            ++ok;
        } catch (const Error&) {
        }
    }
    Outcome o;
    o.pass = ok == static_cast<long>(g.arrows.size());
    o.detail = count_detail(ok, static_cast<long>(g.arrows.size()), "classified") + " (inside " +
               std::to_string(counts[ArrowType::InsideA_X]) + ", commuting " +
               std::to_string(counts[ArrowType::CommutingLetter]) + ", ribbon " +
               std::to_string(counts[ArrowType::Ribbon]) + ")";
    return o;
}

// Elements of signed word length ≤ 5: the whole ball in A2 and B2, 500 random words in A3.
struct Sample {
    ContextPtr ctx;
    std::vector<std::pair<SWord, Element>> items;
};

const std::vector<Sample>& closure_sample() {
    static std::vector<Sample> s = [] {
        std::vector<Sample> out;
        for (const char* t : {"A2", "B2"}) {
            Sample smp{build_context(t), {}};
            for (const auto& b : oracle::ball(smp.ctx, 5)) smp.items.push_back({b.word, b.element});
            out.push_back(std::move(smp));
        }
        Sample a3{build_context("A3"), {}};
        std::mt19937 rng(20240501);
        for (int i = 0; i < 500; ++i) {
            Word w = random_word(rng, 3, 5);
            a3.items.push_back({Reverser::encode(w), from_word(a3.ctx, w)});
        }
        out.push_back(std::move(a3));
        return out;
    }();
    return s;
}

Outcome closure_minimality() {
    long ok = 0, total = 0, no_min = 0;
    std::string first_bad;
    for (const auto& smp : closure_sample()) {
        Reverser R(smp.ctx->spec());
        auto items = oracle::enumerate_parabolics(smp.ctx, 3);
        for (const auto& [w, e] : smp.items) {
            ++total;
            try {
                if (oracle::closure_oracle(R, w, items).engine == parabolic_closure(e)) ++ok;
                else if (first_bad.empty()) first_bad = smp.ctx->type_name() + " " + io::format_word(Reverser::decode(w));
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::NoMinimumFound) throw;
                ++no_min;
            }
        }
    }
    Outcome o;
    o.pass = ok == total;
    o.detail = count_detail(ok, total, "closures agree with the oracle");
    if (no_min) o.detail += ", NoMinimumFound " + std::to_string(no_min);
    if (!first_bad.empty()) o.detail += ", first mismatch " + first_bad;
    return o;
}

Outcome closure_powers() {
    long ok = 0, total = 0;
    for (const auto& smp : closure_sample())
        for (const auto& [w, e] : smp.items) {
            ParabolicSubgroup P = parabolic_closure(e);
            for (int m : {-3, -2, -1, 2, 3}) {
                ++total;
                ok += parabolic_equal(parabolic_closure(power(e, m)), P);
            }
        }
    return {ok == total, count_detail(ok, total, "(alpha, m) cases")};
}

Outcome closure_equivariance() {
    auto ctx = build_context("A3");
    std::mt19937 rng(77);
    long ok = 0, total = 500;
    for (long i = 0; i < total; ++i) {
        Element a = from_word(ctx, random_word(rng, 3, 6)), x = from_word(ctx, random_word(rng, 3, 4));
        ok += parabolic_closure(conjugate(a, x)) == conjugated_parabolic(parabolic_closure(a), x);
    }
    return {ok == total, count_detail(ok, total, "pairs")};
}

// Membership bitsets over a fixed ball, cached per subgroup key.
class MembershipTable {
public:
    MembershipTable(const Reverser& R, const std::vector<oracle::BallElement>& ball) : R_(R), ball_(ball) {}
    const std::vector<bool>& of(const oracle::OracleParabolic& P) {
        auto it = cache_.find(P.engine.z());
        if (it != cache_.end()) return it->second;
        std::vector<bool> bits(ball_.size());
        for (std::size_t i = 0; i < ball_.size(); ++i) bits[i] = oracle::member(R_, P, ball_[i].word);
        return cache_.emplace(P.engine.z(), std::move(bits)).first->second;
    }

private:
    const Reverser& R_;
    const std::vector<oracle::BallElement>& ball_;
    std::unordered_map<Element, std::vector<bool>> cache_;
};

Outcome intersection_oracle() {
    long ok = 0, total = 0, cert = 0;
    std::string first_bad;
    for (const char* t : {"A2", "A3", "B2"}) {
        auto ctx = build_context(t);
        Reverser R(ctx->spec());
        auto ball = oracle::ball(ctx, 5);
        auto items = oracle::enumerate_parabolics(ctx, 2);
        MembershipTable table(R, ball);
        for (std::size_t i = 0; i < items.size(); ++i)
            for (std::size_t j = i; j < items.size(); ++j) {
                ++total;
                LatticeResult r = intersect(items[i].engine, items[j].engine, 5);
                auto Ro = oracle::from_engine(r.result);
                const auto &p = table.of(items[i]), &q = table.of(items[j]), &m = table.of(Ro);
                bool same = true;
                for (std::size_t k = 0; k < ball.size() && same; ++k) same = m[k] == (p[k] && q[k]);
                bool inclusions = r.certificate.verified() && oracle::subgroup_le(R, Ro, items[i]) &&
                                  oracle::subgroup_le(R, Ro, items[j]);
                cert += inclusions;
                if (same && inclusions) ++ok;
                else if (first_bad.empty())
                    first_bad = std::string(t) + " " + io::format_parabolic(items[i].engine) + " and " +
                                io::format_parabolic(items[j].engine);
            }
    }
    Outcome o{ok == total, count_detail(ok, total, "pairs match") + ", certificates " + std::to_string(cert)};
    if (!first_bad.empty()) o.detail += ", first mismatch " + first_bad;
    return o;
}

Outcome standard_intersections() {
    long ok = 0, total = 0;
    for (const char* t : {"A3", "A4", "B3"}) {
        auto ctx = build_context(t);
        std::uint32_t n = 1u << ctx->rank();
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) {
                ++total;
                GeneratorSet X(x), Y(y);
                ok += intersect(standard_parabolic(ctx, X), standard_parabolic(ctx, Y), 5).result ==
                      standard_parabolic(ctx, X & Y);
            }
    }
    return {ok == total, count_detail(ok, total, "pairs")};
}

Outcome adjacency_biconditional() {
    auto ctx = build_context("A4");
    std::vector<GeneratorSet> irr;
    for (std::uint32_t m = 1; m + 1 < (1u << ctx->rank()); ++m)
        if (ctx->is_irreducible(GeneratorSet(m))) irr.push_back(GeneratorSet(m));
    long ok = 0, total = 0;
    auto check = [&](const ParabolicSubgroup& P, const ParabolicSubgroup& Q) {
        ++total;
        ok += z_commute(P, Q) == (pair_conditions(P, Q, 4).count() == 1);
    };
    for (auto X : irr)
        for (auto Y : irr)
            if (!(X == Y)) check(standard_parabolic(ctx, X), standard_parabolic(ctx, Y));
    long standard = total;
    std::mt19937 rng(91);
    std::uniform_int_distribution<std::size_t> pick(0, irr.size() - 1);
    long conjugated = 0;
    while (conjugated < 200) {
        ParabolicSubgroup P(from_word(ctx, random_word(rng, 4, 3)), irr[pick(rng)]);
        ParabolicSubgroup Q(from_word(ctx, random_word(rng, 4, 3)), irr[pick(rng)]);
        if (P == Q) continue;
        check(P, Q);
        ++conjugated;
    }
    return {ok == total, count_detail(ok, total, "pairs") + " (" + std::to_string(standard) + " standard, " +
                             std::to_string(conjugated) + " conjugated)"};
}

Outcome iterated_cycling() {
    std::mt19937 rng(101);
    long ok = 0, total = 0, sampled = 0;
    for (const char* t : {"A2", "A3"}) {
        auto ctx = build_context(t);
        GarsideStructure st(ctx, 1);
        long here = 0;
        while (here < 120) {
            Element a = conjugate_to_uss(from_word(ctx, random_word(rng, ctx->rank(), 10)), st).result;
            if (a.canonical_length() <= 1) continue;
            ++here;
            for (int m = 1; m <= 6; ++m) {
                ++total;
                Element lhs = meet_prefix(power(a, m) * delta_power(ctx, -m * a.delta_power()), delta_power(ctx, m));
                ok += lhs == iterated_cycling_conjugator(a, m, st);
            }
        }
        sampled += here;
    }
    return {ok == total, count_detail(ok, total, "(alpha, m) cases over " + std::to_string(sampled) + " USS elements")};
}

Outcome convexity() {
    std::mt19937 rng(113);
    long ok = 0, total = 0, graphs = 0;
    auto audit = [&](const SummitGraph& g, const SummitMembership& mem) {
        ++graphs;
        std::uniform_int_distribution<std::size_t> pick(0, g.vertices.size() - 1);
        std::uniform_int_distribution<int> k(-1, 1);
        for (int s = 0; s < 100; ++s) {
            std::size_t i = pick(rng), j = pick(rng);
            Element x = g.witnesses[i] * power(g.vertices[i], k(rng));
            Element y = g.witnesses[j] * power(g.vertices[j], k(rng));
            ++total;
            ok += mem.contains(conjugate(g.input, meet_prefix(x, y)));
        }
    };
    {
        auto ctx = build_context("A4");
        SummitGraph g = figure_graph();
        audit(g, SummitMembership(g.input, SummitKind::PositiveConjugates, GarsideStructure(ctx, 1)));
    }
    for (const char* t : {"A2", "A3", "B3"}) {
        auto ctx = build_context(t);
        for (int N : {1, 2})
            for (int i = 0; i < 4; ++i) {
                Element a = from_word(ctx, random_word(rng, ctx->rank(), 8));
                for (auto kind : {SummitKind::SSS, SummitKind::USS, SummitKind::RSSS, SummitKind::SU}) {
                    GarsideStructure st(ctx, N);
                    SummitGraph g = compute_summit_graph(a, kind, st);
                    audit(g, SummitMembership(a, kind, st));
                }
            }
    }
    return {ok == total, count_detail(ok, total, "witness pairs over " + std::to_string(graphs) + " graphs")};
}

Outcome ribbons() {
    long ok = 0, total = 0;
    for (const char* t : {"A4", "B3"}) {
        auto ctx = build_context(t);
        for (std::uint32_t m = 0; m + 1 < (1u << ctx->rank()); ++m) {
            GeneratorSet X(m);
            for (int s : (ctx->all() - X).members()) {
                ++total;
                Element r = ribbon(ctx, X, s);
                GeneratorSet Y = X | GeneratorSet::single(s);
                bool good = true;
                for (int x : X.members()) {
                    Element c = conjugate(generator(ctx, x), r);
                    auto w = letters(c);
                    good = good && c.is_positive() && w.size() == 1 && Y.contains(w[0]);
                }
                for (int u = 0; u < ctx->rank(); ++u) good = good && prefix_le(generator(ctx, u), r) == (u == s);
                ok += good;
            }
        }
    }
    return {ok == total, count_detail(ok, total, "(X, t) pairs")};
}

// Left normal form characterized through oracle meets: each factor is (remainder) ∧ Δ^N.
bool normal_form_agrees(const Reverser& R, const Element& e, const SWord& w, int N) {
    const auto& ctx = e.context_ptr();
    StructuredForm f = left_normal_form(e, GarsideStructure(ctx, N));
    SWord dN;
    SWord d = R.delta_word();
    for (int i = 0; i < N; ++i) dN = Reverser::cat(dN, d);
    SWord shift;
    for (long long i = 0; i < std::abs(f.power); ++i) shift = Reverser::cat(shift, f.power > 0 ? dN : Reverser::inv(dN));
    // remainder = Δ^{-Np}·w must be positive and not divisible by Δ^N
    SWord rem = R.np(Reverser::cat(Reverser::inv(shift), w)).second;
    if (!R.is_positive(Reverser::cat(Reverser::inv(shift), w))) return false;
    if (!f.factors.empty() && R.prefix_le(dN, rem)) return false;
    if (f.factors.empty() && !rem.empty()) return false;
    for (const auto& x : f.factors) {
        SWord xw = oracle::word_of(x);
        if (!R.equal(xw, R.meet(rem, dN))) return false;
        rem = R.np(Reverser::cat(Reverser::inv(xw), rem)).second;
    }
    return rem.empty();
}

Outcome garside_core() {
    long ok = 0, total = 0;
    std::string first_bad;
    std::mt19937 rng(127);
    for (auto [t, radius] : {std::pair{"A2", 5}, {"A3", 4}, {"B2", 4}}) {
        auto ctx = build_context(t);
        Reverser R(ctx->spec());
        auto ball = oracle::ball(ctx, radius);
        std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
        const bool brute = std::string(t) == "A2";
        for (const auto& b : ball) {
            const SWord& u = b.word;
            const Element& a = b.element;
            bool good = normal_form_agrees(R, a, u, 1) && normal_form_agrees(R, a, u, 2);
            MixedForm np = np_normal_form(a);
            auto [x, y] = R.np(u);
            good = good && R.equal(oracle::word_of(np.negative), x) && R.equal(oracle::word_of(np.positive), y);
            PnForm pn = pn_normal_form(a);
            auto [p, q] = R.pn(u);
            good = good && R.equal(oracle::word_of(pn.positive), p) && R.equal(oracle::word_of(pn.negative), q);
            for (int k = 0; k < 6; ++k) {
                const auto& c = ball[pick(rng)];
                const SWord& v = c.word;
                const Element& e = c.element;
                SWord mp = brute ? oracle::brute_meet(R, u, v) : R.meet(u, v);
                SWord ms = brute ? oracle::brute_meet(R, u, v, oracle::Order::Suffix) : R.meet_suffix(u, v);
                good = good && R.equal(oracle::word_of(meet_prefix(a, e)), mp) &&
                       R.equal(oracle::word_of(meet_suffix(a, e)), ms) &&
                       R.equal(oracle::word_of(join_prefix(a, e)), R.join(u, v)) &&
                       R.equal(oracle::word_of(join_suffix(a, e)), R.join_suffix(u, v));
            }
            ++total;
            if (good) ++ok;
            else if (first_bad.empty()) first_bad = std::string(t) + " " + io::format_word(Reverser::decode(u));
        }
    }
    Outcome o{ok == total, count_detail(ok, total, "ball elements (6 partners each)")};
    if (!first_bad.empty()) o.detail += ", first mismatch " + first_bad;
    return o;
}

Outcome transport() {
    std::mt19937 rng(131);
    long ok = 0, total = 0;
    for (const char* t : {"A2", "A3"}) {
        auto ctx = build_context(t);
        GarsideStructure st(ctx, 1);
        long here = 0;
        while (here < 60) {
            Element a = from_word(ctx, random_word(rng, ctx->rank(), 8));
            SummitGraph g = compute_summit_graph(a, SummitKind::USS, st);
            std::uniform_int_distribution<std::size_t> pick(0, g.vertices.size() - 1);
            for (int s = 0; s < 3; ++s, ++here) {
                std::size_t i = pick(rng), j = pick(rng);
                const Element &v = g.vertices[i], &w = g.vertices[j];
                Element x = inverse(g.witnesses[i]) * g.witnesses[j];
                StableTwistedConjugator c = stable_twisted_conjugator(v, w, x, st);
                bool direct = conjugate(c.twisted_v, x) == c.twisted_w && c.twisted_v * v == v * c.twisted_v &&
                              c.twisted_w * w == w * c.twisted_w;
                ++total;
                ok += direct && c.conjugation_holds && c.commutes_v && c.commutes_w && c.M > 0;
            }
        }
    }
    return {ok == total, count_detail(ok, total, "USS triples")};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "positive-conjugates graph of s1 s2 in A4", 5, figure_one},
        {2, "z-action of the arrow labels", 5, figure_two},
        {3, "arrow classification", 0, classification},
        {4, "closure minimality against the oracle", 600, closure_minimality},
        {5, "closure invariance under powers", 600, closure_powers},
        {6, "closure equivariance under conjugation", 0, closure_equivariance},
        {7, "intersection against the oracle", 900, intersection_oracle},
        {8, "standard intersections", 0, standard_intersections},
        {9, "z-commutation biconditional", 0, adjacency_biconditional},
        {10, "iterated cycling identity", 0, iterated_cycling},
        {11, "summit set convexity audit", 0, convexity},
        {12, "ribbon conjugation and prefixes", 0, ribbons},
        {13, "normal forms, meets, joins, np/pn against oracles", 0, garside_core},
        {14, "transport and stable twisted conjugators", 0, transport},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit_s == 0 || secs < c.limit_s;
        bool pass = o.pass && in_time;
        failed += !pass;
        std::ostringstream limit;
        if (c.limit_s > 0) limit << " / limit " << c.limit_s << "s";
        std::printf("criterion %2d: %s  %s: %s [%.2fs%s]\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    secs, limit.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
