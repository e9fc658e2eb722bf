#include <gtest/gtest.h>

#include <set>

#include "pfrob/density.hpp"
#include "pfrob/parser.hpp"

using namespace pfrob;

namespace {
GlobalCurve curve(const char *src, const FieldCtx &F) { return GlobalCurve(parse_bipoly(src, F)); }
} // namespace

TEST(DensityOracle, OrbitPeriods) {
    const FieldPtr F = make_field(5, 6);
    const Fq deg2 = F->generator().pow((F->q() - 1) / 24), deg3 = F->generator().pow((F->q() - 1) / 124);
    ASSERT_EQ(deg2.degree(), 2u);
    ASSERT_EQ(deg3.degree(), 3u);
    const OrbitData a = frob_orbit({deg2, F->elem(2)});
    EXPECT_EQ(a.r1, 2u);
    EXPECT_EQ(a.r2, 1u);
    EXPECT_EQ(a.r, 2u);
    EXPECT_EQ(frob_orbit({F->elem(1), F->elem(3)}).r, 1u);
    EXPECT_EQ(frob_orbit({deg3, deg2}).r, 6u);
}

TEST(DensityOracle, ArtinSchreierCounts) {
    const FieldPtr F = make_field(5, 1);
    const GlobalCurve c = curve("x2 - x1", *F), d = curve("x2 - x1 - 1", *F);
    for (u64 n = 1; n <= 5; ++n) {
        const SnCount s = s_n_count(c, d, Axis::One, n, 4);
        EXPECT_EQ(s.count, detail::checked_pow(5, n));
        EXPECT_LE(s.count, global_intersection(pullback_global(c, Axis::One, n), d));
    }
    EXPECT_EQ(s_n_count(c, d, Axis::One, 0, 4).count, 0u);
}

TEST(DensityOracle, ZeroPowerPairsAreCommonPoints) {
    const FieldPtr F = make_field(5, 1);
    const GlobalCurve c = curve("x2 - x1", *F), d = curve("x1*x2 - 1", *F);
    const auto pairs = isogenous_pairs(c, d, 2, 0);
    std::set<SurfacePoint> common;
    for (const auto &x : curve_points(c, 2))
        if (d.poly()(x.x1, x.x2).is_zero()) common.insert(x);
    std::set<SurfacePoint> seen;
    for (const auto &pr : pairs) {
        EXPECT_EQ(pr.x, pr.y);
        seen.insert(pr.x);
    }
    EXPECT_EQ(seen, common);
    EXPECT_EQ(seen.size(), 2u);
}

TEST(DensityOracle, DiagonalPairsWithOrbit) {
    const FieldPtr F = make_field(3, 1);
    const GlobalCurve c = curve("x2 - x1^2", *F);
    const auto pairs = isogenous_pairs(c, c, 2, 1);
    for (const auto &x : curve_points(c, 2)) {
        const SurfacePoint fx{x.x1.frobenius(1), x.x2.frobenius(1)};
        bool found = false;
        for (const auto &pr : pairs) found = found || (pr.x == x && pr.y == fx) || (pr.y == x && pr.x == fx);
        EXPECT_TRUE(found);
    }
}

TEST(DensityOracle, ArtinSchreierPairsNeedDegreeDivisibleByFive) {
    const FieldPtr F = make_field(5, 1);
    const GlobalCurve c = curve("x2 - x1", *F), d = curve("x2 - x1 - 1", *F);
    for (unsigned m = 1; m <= 3; ++m) EXPECT_TRUE(isogenous_pairs(c, d, m, 2).empty());
    EXPECT_FALSE(isogenous_pairs(c, d, 5, 1).empty());
}

TEST(DensityOracle, RankTest) {
    const FieldPtr F = make_field(5, 1);
    const GlobalCurve c = curve("x2 - x1", *F), d = curve("x2 - x1 - 1", *F);
    std::vector<IsogenyPair> full;
    for (const auto &x : curve_points(c, 2))
        for (const auto &y : curve_points(d, 2)) full.push_back({x, y, 0, 0, true});
    EXPECT_TRUE(density_rank_test(full, {1, 1, 1, 1}, c, d, 2).dense);

    std::vector<IsogenyPair> vertical;
    const SurfacePoint x = curve_points(c, 2)[7];
    for (const auto &y : curve_points(d, 2)) vertical.push_back({x, y, 0, 0, true});
    const DensityVerdict v = density_rank_test(vertical, {1, 1, 1, 1}, c, d, 2);
    EXPECT_FALSE(v.dense);
    ASSERT_FALSE(v.witness.empty());
    for (const auto &w : v.witness) EXPECT_EQ(w.exps[2] + w.exps[3], 0u);
    for (const auto &pr : vertical) {
        const std::array<Fq, 4> vals{pr.x.x1, pr.x.x2, pr.y.x1, pr.y.x2};
        Fq sum = vals[0].ctx().zero();
        for (const auto &w : v.witness) {
            Fq term = w.coeff;
            for (int i = 0; i < 4; ++i) term = term * vals[i].pow(w.exps[i]);
            sum = sum + term;
        }
        EXPECT_TRUE(sum.is_zero());
    }
    try {
        density_rank_test({}, {1, 1, 1, 1}, c, d, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::InsufficientPairs);
    }
}
