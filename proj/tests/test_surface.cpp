#include <gtest/gtest.h>

#include "pfrob/parser.hpp"
#include "pfrob/surface.hpp"
#include "pfrob/verify.hpp"

using namespace pfrob;

namespace {
GlobalCurve curve(const char *src, const FieldCtx &F) { return GlobalCurve(parse_bipoly(src, F)); }
} // namespace

TEST(SurfaceOracle, Pullback) {
    const FieldPtr F = make_field(5, 1);
    const GlobalCurve c = curve("x1 - x2", *F);
    const GlobalCurve c1 = pullback_global(c, Axis::One, 1);
    EXPECT_EQ(to_string(c1.poly()), to_string(parse_bipoly("x1^5 - x2", *F)));
    EXPECT_EQ(c1.d1(), 5u);
    EXPECT_EQ(c1.d2(), 1u);
    EXPECT_EQ(pullback_global(c, Axis::Two, 0).poly(), c.poly());
    EXPECT_EQ(pullback_global(pullback_global(c, Axis::One, 1), Axis::Two, 1).poly(),
              parse_bipoly("x1^5 - x2^5", *F));
}

TEST(SurfaceOracle, GlobalIntersection) {
    const FieldPtr F = make_field(5, 1);
    EXPECT_EQ(global_intersection(curve("x1 - x2", *F), curve("x1*x2 + 1", *F)), 2u);
    EXPECT_EQ(global_intersection(pullback_global(curve("x1 - x2", *F), Axis::One, 1), curve("x1*x2 + 1", *F)), 6u);
    try {
        global_intersection(curve("x1 - x2", *F), curve("x1 - x2", *F));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::CommonComponent);
    }
}

TEST(SurfaceOracle, IntersectWithZ) {
    const FieldPtr F = make_field(5, 1);
    const NonOrdDivisor z = nonord_divisor(5);
    const GlobalCurve c = curve("x1 - x2", *F);
    auto triple = [&](Axis ax, u64 n) {
        const ZIntersection zi = intersect_with_Z(c, z, ax, n);
        EXPECT_TRUE(zi.pass);
        return std::array<u64, 3>{zi.cz1, zi.cz2, zi.total};
    };
    EXPECT_EQ(triple(Axis::One, 0), (std::array<u64, 3>{1, 1, 2}));
    EXPECT_EQ(triple(Axis::One, 1), (std::array<u64, 3>{1, 5, 6}));
    EXPECT_EQ(triple(Axis::Two, 1), (std::array<u64, 3>{5, 1, 6}));
}

TEST(SurfaceOracle, HeightSeries) {
    const FieldPtr F = make_field(5, 1);
    const auto s = faltings_height_series(curve("x1 - x2", *F), nonord_divisor(5), Axis::One, 4);
    const std::vector<std::string> expect{"1/2", "3/2", "13/2", "63/2", "313/2"};
    for (std::size_t n = 0; n < s.size(); ++n) {
        EXPECT_EQ(s[n].h.str(), expect[n]);
        EXPECT_EQ(s[n].h, s[n].closed_form);
    }
}

TEST(SurfaceOracle, BezoutEnumeration) {
    const FieldPtr F = make_field(5, 1);
    const BezoutReport a = sum_of_local_mults(curve("x1 - x2", *F), curve("x1 + x2 - 1", *F), 2);
    EXPECT_EQ(a.expected, 2u);
    EXPECT_EQ(a.found, 2u);
    EXPECT_EQ(a.points.size(), 2u);

    // x2 = x1^2 meets x2 = 0 doubly at the origin; the line x2 = 0 and the
    // conic share no further point, so the bidegree number is 2.
    const BezoutReport b = sum_of_local_mults(curve("x2 - x1^2", *F), curve("x2", *F), 2);
    EXPECT_EQ(b.expected, 2u);
    EXPECT_EQ(b.found, 2u);
    ASSERT_EQ(b.points.size(), 1u);
    EXPECT_EQ(b.points[0].multiplicity, 2u);
}

TEST(SurfaceOracle, SearchExhaustedReportsDeficit) {
    const FieldPtr F = make_field(5, 1);
    // x1^2 = 2 has no root over F_5, so both points live over F_25
    try {
        sum_of_local_mults(curve("x1^2 - 2", *F), curve("x2", *F), 1);
        FAIL();
    } catch (const SearchExhausted &e) {
        EXPECT_EQ(e.code(), Errc::FieldSearchExhausted);
        EXPECT_EQ(e.deficit(), 2u);
    }
    EXPECT_EQ(sum_of_local_mults(curve("x1^2 - 2", *F), curve("x2", *F), 2).found, 2u);
}

TEST(SurfaceProperty, GlobalZIdentity) {
    VerifyConfig cfg;
    cfg.seed = 21;
    EXPECT_TRUE(verify_global_z(cfg, 5, 4).pass());
}

TEST(SurfaceProperty, BezoutConsistency) {
    VerifyConfig cfg;
    cfg.seed = 22;
    cfg.p = 5;
    const SuiteReport r = verify_bezout(cfg, 10, 4);
    EXPECT_TRUE(r.checks[1].pass) << r.checks[1].actual.dump();
}
