#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace artin;
using namespace testing_support;

TEST(Intersect, StandardExamples) {
    auto a3 = build_context("A3");
    LatticeResult r = intersect(standard_parabolic(a3, gens({1, 2})), standard_parabolic(a3, gens({2, 3})), 5);
    EXPECT_EQ(r.result, standard_parabolic(a3, gens({2})));
    EXPECT_TRUE(r.certificate.verified());
    ParabolicSubgroup P = make_parabolic(el(a3, "s3 s2"), gens({1, 2}));
    EXPECT_EQ(intersect(P, P, 3).result, P);
    auto a4 = build_context("A4");
    EXPECT_TRUE(intersect(standard_parabolic(a4, gens({1})), standard_parabolic(a4, gens({3})), 5).result.is_trivial());
}

TEST(Join, StandardExamples) {
    auto a3 = build_context("A3");
    LatticeResult r = join(standard_parabolic(a3, gens({1})), standard_parabolic(a3, gens({2})), 3);
    EXPECT_EQ(r.result, standard_parabolic(a3, gens({1, 2})));
    EXPECT_TRUE(r.certificate.z_in_p && r.certificate.z_in_q);
    ParabolicSubgroup P = make_parabolic(el(a3, "s1^-1"), gens({2, 3}));
    EXPECT_EQ(join(P, P, 3).result, P);
    EXPECT_EQ(join(P, standard_parabolic(a3, a3->all()), 3).result, standard_parabolic(a3, a3->all()));
}

TEST(LatticeProperty, StandardIntersectionsAndJoins) {
    for (const char* t : {"A3", "A4", "B3"}) {
        auto ctx = build_context(t);
        std::uint32_t n = 1u << ctx->rank();
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) {
                GeneratorSet X(x), Y(y);
                auto P = standard_parabolic(ctx, X), Q = standard_parabolic(ctx, Y);
                EXPECT_EQ(intersect(P, Q, 3).result, standard_parabolic(ctx, X & Y));
                EXPECT_EQ(join(P, Q, 2).result, standard_parabolic(ctx, X | Y));
            }
    }
}

// Conjugating both arguments conjugates the intersection.
TEST(LatticeProperty, IntersectionIsEquivariant) {
    std::mt19937 rng(41);
    auto ctx = build_context("A3");
    for (int i = 0; i < 40; ++i) {
        ParabolicSubgroup P(random_element(rng, ctx, 3), GeneratorSet(std::uniform_int_distribution<std::uint32_t>(0, 7)(rng)));
        ParabolicSubgroup Q(random_element(rng, ctx, 3), GeneratorSet(std::uniform_int_distribution<std::uint32_t>(0, 7)(rng)));
        Element x = random_element(rng, ctx, 3);
        ParabolicSubgroup R = intersect(P, Q, 4).result;
        EXPECT_TRUE(contains_subgroup(P, R) && contains_subgroup(Q, R));
        EXPECT_EQ(intersect(conjugated_parabolic(P, x), conjugated_parabolic(Q, x), 4).result, conjugated_parabolic(R, x));
    }
}

TEST(Adjacency, ZCommute) {
    auto a2 = build_context("A2");
    EXPECT_TRUE(z_commute(standard_parabolic(a2, gens({1})), standard_parabolic(a2, a2->all())));
    EXPECT_FALSE(z_commute(standard_parabolic(a2, gens({1})), standard_parabolic(a2, gens({2}))));
    auto a4 = build_context("A4");
    EXPECT_TRUE(z_commute(standard_parabolic(a4, gens({1})), standard_parabolic(a4, gens({3}))));
}

TEST(Adjacency, CharacterizePair) {
    auto a2 = build_context("A2");
    try {
        characterize_pair(standard_parabolic(a2, gens({1})), standard_parabolic(a2, a2->all()));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotProper);
    }
    auto a4 = build_context("A4");
    auto v = characterize_pair(standard_parabolic(a4, gens({1})), standard_parabolic(a4, gens({3})));
    EXPECT_TRUE(v.commute);
    EXPECT_EQ(v.condition, AdjacencyCondition::DisjointCommuting);
    auto w = characterize_pair(standard_parabolic(a4, gens({1})), standard_parabolic(a4, gens({1, 2})));
    EXPECT_EQ(w.condition, AdjacencyCondition::ProperSubset_PQ);
    auto u = characterize_pair(standard_parabolic(a4, gens({1, 2})), standard_parabolic(a4, gens({2, 3})));
    EXPECT_FALSE(u.commute);
    EXPECT_FALSE(u.condition.has_value());
    EXPECT_THROW(characterize_pair(standard_parabolic(a4, gens({1, 3})), standard_parabolic(a4, gens({2}))), Error);
    EXPECT_THROW(characterize_pair(standard_parabolic(a4, gens({1})), standard_parabolic(a4, gens({1}))), Error);
}

TEST(Complex, Neighbors) {
    auto a2 = build_context("A2");
    EXPECT_TRUE(complex_neighbors(standard_parabolic(a2, gens({1})), 0).empty());
    auto a4 = build_context("A4");
    ParabolicSubgroup P = standard_parabolic(a4, gens({1}));
    auto n = complex_neighbors(P, 0);
    for (auto X : {gens({3}), gens({4}), gens({3, 4}), gens({1, 2}), gens({1, 2, 3})})
        EXPECT_NE(std::find(n.begin(), n.end(), standard_parabolic(a4, X)), n.end());
    EXPECT_EQ(std::find(n.begin(), n.end(), P), n.end());
    EXPECT_EQ(std::find(n.begin(), n.end(), standard_parabolic(a4, gens({2}))), n.end());
    for (const auto& Q : complex_neighbors(P, 1)) {
        EXPECT_FALSE(Q == P);
        EXPECT_TRUE(z_commute(P, Q));
    }
}

TEST(Complex, Ball) {
    auto a3 = build_context("A3");
    ComplexBall b = complex_ball(standard_parabolic(a3, gens({1})), 1, 1);
    EXPECT_NE(std::find(b.vertices.begin(), b.vertices.end(), b.center), b.vertices.end());
    for (auto [i, j] : b.edges) EXPECT_TRUE(z_commute(b.vertices[i], b.vertices[j]));
    EXPECT_THROW(complex_ball(standard_parabolic(a3, gens({1, 3})), 1, 1), Error);
}

TEST(Complex, SubsequenceCheck) {
    auto a2 = build_context("A2");
    EXPECT_TRUE(subsequence_invariance_check(a2, {0, 1, 0}, {1, 0, 1}, {0, 1}));
    EXPECT_FALSE(subsequence_invariance_check(a2, {1, 1}, {1, 1}, {0, 1}));
    auto a3 = build_context("A3");
    EXPECT_TRUE(subsequence_invariance_check(a3, {0, 1, 0}, {1, 0, 1}, {0, 1}));
    EXPECT_THROW(subsequence_invariance_check(a3, {0, 2}, {2, 0}, {0, 2}), Error);
}

// Equivalence of commuting z elements with exactly one of the three conditions.
TEST(AdjacencyProperty, ConjugatedPairs) {
    std::mt19937 rng(43);
    auto ctx = build_context("A4");
    std::vector<GeneratorSet> irr;
    for (std::uint32_t m = 1; m < 15; ++m)
        if (ctx->is_irreducible(GeneratorSet(m))) irr.push_back(GeneratorSet(m));
    std::uniform_int_distribution<std::size_t> pick(0, irr.size() - 1);
    int checked = 0;
    while (checked < 60) {
        ParabolicSubgroup P(random_element(rng, ctx, 3), irr[pick(rng)]), Q(random_element(rng, ctx, 3), irr[pick(rng)]);
        if (P == Q) continue;
        auto c = pair_conditions(P, Q, 4);
        EXPECT_EQ(z_commute(P, Q), c.count() == 1);
        ++checked;
    }
}
