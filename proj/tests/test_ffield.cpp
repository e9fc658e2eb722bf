#include <gtest/gtest.h>

#include <random>

#include "pfrob/ffield.hpp"
#include "pfrob/linalg.hpp"

using namespace pfrob;

TEST(FieldOracle, PrimeFieldHasLinearModulus) {
    const FieldPtr F = make_field(5, 1);
    EXPECT_EQ(F->q(), 5u);
    EXPECT_EQ(F->modulus(), (std::vector<u64>{0, 1}));
}

TEST(FieldOracle, F4ModulusIsTheOnlyIrreducibleQuadratic) {
    const FieldPtr F = make_field(2, 2);
    EXPECT_EQ(F->modulus(), (std::vector<u64>{1, 1, 1}));
}

TEST(FieldOracle, NonPrimeRejected) {
    try {
        make_field(4, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::NonPrime);
    }
}

TEST(FieldOracle, FrobeniusExamples) {
    const FieldPtr F5 = make_field(5, 1);
    EXPECT_EQ(F5->elem(3).frobenius(3), F5->elem(3));
    const FieldPtr F4 = make_field(2, 2);
    const Fq a = F4->generator();
    EXPECT_EQ(a.frobenius(1), a * a);
    EXPECT_EQ(a.frobenius(1), a + F4->one());
    EXPECT_EQ(a.frobenius(0), a);
}

TEST(FieldOracle, RootsInExtension) {
    const FieldPtr F5 = make_field(5, 1);
    auto r = roots_in_extension(UniPoly::from_ints(*F5, {-1, 0, 1}), 1);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].root.index(), 1u);
    EXPECT_EQ(r[1].root.index(), 4u);

    const FieldPtr F3 = make_field(3, 1);
    const UniPoly x2p1 = UniPoly::from_ints(*F3, {1, 0, 1});
    EXPECT_TRUE(roots_in_extension(x2p1, 1).empty());
    EXPECT_EQ(roots_in_extension(x2p1, 2).size(), 2u);

    const FieldPtr F7 = make_field(7, 1);
    auto sq = roots_in_extension(UniPoly::from_ints(*F7, {4, -4, 1}), 1);
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq[0].root.index(), 2u);
    EXPECT_EQ(sq[0].multiplicity, 2u);
}

TEST(FieldProperty, AxiomsOnRandomTriples) {
    std::mt19937_64 rng(1);
    for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {5, 3}, {7, 2}, {2, 8}}) {
        const FieldPtr F = make_field(p, k);
        for (int i = 0; i < 1000; ++i) {
            const Fq a = F->elem(rng() % F->q()), b = F->elem(rng() % F->q()), c = F->elem(rng() % F->q());
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ((a + b) - b, a);
            if (!a.is_zero()) {
                ASSERT_TRUE((a * a.inv()).is_one());
            }
            ASSERT_EQ((a + b).frobenius(1), a.frobenius(1) + b.frobenius(1));
            ASSERT_EQ(a.frobenius(k), a);
        }
    }
}

TEST(FieldProperty, GeneratorChoice) {
    for (u64 p : {5, 7, 11}) {
        const FieldPtr F = make_field(p, 1);
        const Fq g = F->generator();
        u64 order = 1;
        for (Fq x = g; !x.is_one(); x = x * g) ++order;
        EXPECT_EQ(order, p - 1);
    }
    for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {2, 4}, {3, 3}, {5, 2}}) {
        const FieldPtr F = make_field(p, k);
        EXPECT_EQ(F->generator().index(), p);
        EXPECT_EQ(F->generator().degree(), k);
    }
}

TEST(FieldProperty, EmbeddingIsAHomomorphism) {
    const FieldPtr small = make_field(3, 2), big = make_field(3, 4);
    const FieldEmbedding &emb = embedding(*small, *big);
    for (u64 i = 0; i < small->q(); ++i)
        for (u64 j = 0; j < small->q(); ++j) {
            const Fq a = small->elem(i), b = small->elem(j);
            ASSERT_EQ(emb(a * b), emb(a) * emb(b));
            ASSERT_EQ(emb(a + b), emb(a) + emb(b));
        }
}

TEST(UniPolyProperty, DivmodAndGcd) {
    const FieldPtr F = make_field(7, 1);
    std::mt19937_64 rng(3);
    auto rnd = [&](int deg) {
        std::vector<Fq> c;
        for (int i = 0; i <= deg; ++i) c.push_back(F->elem(rng() % 7));
        c.back() = F->elem(1 + rng() % 6);
        return UniPoly(*F, c);
    };
    for (int t = 0; t < 200; ++t) {
        const UniPoly a = rnd(6), b = rnd(3), h = rnd(2);
        const auto [q, r] = UniPoly::divmod(a, b);
        ASSERT_EQ(q * b + r, a);
        ASSERT_LT(r.degree(), b.degree());
        const UniPoly g = gcd(a * h, b * h);
        ASSERT_TRUE(UniPoly::divmod(g, h.monic()).second.is_zero());
    }
}

TEST(Linalg, RankAndNullspace) {
    const FieldPtr F = make_field(5, 1);
    std::vector<std::vector<u64>> rows{{1, 2, 3}, {2, 4, 1}, {0, 1, 1}};
    EXPECT_EQ(matrix_rank(*F, rows, 3), 2u);
    const auto ns = nullspace(*F, rows, 3);
    ASSERT_EQ(ns.size(), 1u);
    for (const auto &r : rows) {
        u64 s = 0;
        for (int j = 0; j < 3; ++j) s = F->add(s, F->mul(r[j], ns[0][j]));
        EXPECT_EQ(s, 0u);
    }
}
