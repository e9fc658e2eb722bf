#include <gtest/gtest.h>

#include <random>

#include "pfrob/parser.hpp"
#include "pfrob/pseries.hpp"

using namespace pfrob;

namespace {
TruncSeries2 s2(const char *src, const FieldCtx &F) { return parse_series2(src, F); }
TruncSeries1 s1(const char *src, const FieldCtx &F, std::size_t prec = kExact) { return parse_series1(src, F, prec); }
} // namespace

TEST(SeriesOracle, Valuation) {
    const FieldPtr F = make_field(5, 1);
    EXPECT_EQ(s1("u - u^2", *F, 10).valuation().value(), 1u);
    const Valuation z = TruncSeries1(*F, 10).valuation();
    EXPECT_TRUE(z.is_indeterminate());
    EXPECT_EQ(z.lower_bound(), 10u);
    const Valuation u6 = s1("u^6", *F, 5).valuation();
    EXPECT_TRUE(u6.is_indeterminate());
    EXPECT_EQ(u6.lower_bound(), 5u);
    EXPECT_THROW(u6.value(), Error);
}

TEST(SeriesOracle, SubstituteBranch) {
    const FieldPtr F5 = make_field(5, 1);
    const BranchParam b(s1("u", *F5), s1("u^2", *F5));
    EXPECT_EQ(to_string(substitute_branch(s2("t1 - t2", *F5), b)), to_string(s1("u - u^2", *F5)));

    const FieldPtr F7 = make_field(7, 1);
    const TruncSeries1 cusp = substitute_branch(s2("t2^2 - t1^3", *F7), BranchParam(s1("u^2", *F7), s1("u^3", *F7)));
    EXPECT_TRUE(cusp.valuation().is_infinite());
    const TruncSeries1 diag = substitute_branch(s2("t2^2 - t1^3", *F7), BranchParam(s1("u", *F7), s1("u", *F7)));
    EXPECT_EQ(diag.valuation().value(), 2u);
    EXPECT_EQ(to_string(diag), to_string(s1("u^2 - u^3", *F7)));
}

TEST(SeriesOracle, PartialFrobeniusPullback) {
    const FieldPtr F3 = make_field(3, 1);
    const TruncSeries2 f = s2("t1 + t2", *F3);
    EXPECT_EQ(to_string(partial_frobenius_pullback(f, Axis::One, 1)), "t1^3 + t2");
    EXPECT_EQ(to_string(partial_frobenius_pullback(f, Axis::Two, 0)), to_string(f));
    const TruncSeries2 g = s2("t1^2*t2 + 2*t2 + t1", *F3);
    EXPECT_EQ(to_string(partial_frobenius_pullback(partial_frobenius_pullback(g, Axis::One, 1), Axis::Two, 1)),
              to_string(s2("t1^6*t2^3 + 2*t2^3 + t1^3", *F3)));
}

TEST(SeriesOracle, AxisDecompose) {
    const FieldPtr F = make_field(5, 1);
    const auto a = axis_decompose(s2("t2 - t1", *F));
    EXPECT_EQ(a.e.value(), 1u);
    EXPECT_EQ(a.d.value(), 1u);
    const auto c = axis_decompose(s2("t2^2 - t1^3", *F));
    EXPECT_EQ(c.e.value(), 2u);
    EXPECT_EQ(c.d.value(), 3u);
    const auto x = axis_decompose(s2("t1*t2", *F));
    EXPECT_TRUE(x.e.is_infinite());
    EXPECT_TRUE(x.d.is_infinite());
}

TEST(SeriesOracle, HenselParametrize) {
    const FieldPtr F5 = make_field(5, 1);
    const BranchParam b = hensel_parametrize(s2("t2 - t1 - t1^2", *F5), Axis::Two, 8);
    EXPECT_EQ(to_string(b.alpha(Axis::Two)), to_string(s1("u + u^2", *F5)));

    const TruncSeries2 g = s2("t2 + t1 + t2^2", *F5);
    const BranchParam h = hensel_parametrize(g, Axis::Two, 6);
    EXPECT_EQ(h.precision(), 6u);
    EXPECT_EQ(h.alpha(Axis::Two).coeff(1), F5->from_integer(-1));
    EXPECT_EQ(h.alpha(Axis::Two).coeff(2), F5->from_integer(-1));
    EXPECT_EQ(h.alpha(Axis::Two).coeff(3), F5->from_integer(-2));
    EXPECT_TRUE(substitute_branch(g, h).valuation().is_indeterminate());

    try {
        hensel_parametrize(s2("t2^2 - t1", *F5), Axis::Two, 6);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::NotSmoothAlongAxis);
    }
}

TEST(SeriesProperty, PrecisionSoundness) {
    std::mt19937_64 rng(5);
    const FieldPtr F = make_field(7, 1);
    for (int t = 0; t < 50; ++t) {
        std::vector<Fq> a, b;
        for (int i = 0; i < 20; ++i) a.push_back(F->elem(rng() % 7)), b.push_back(F->elem(rng() % 7));
        b[0] = F->elem(1 + rng() % 6);
        const TruncSeries1 lo = TruncSeries1::mul(TruncSeries1(*F, a, 8), TruncSeries1(*F, b, 8), 8);
        const TruncSeries1 hi = TruncSeries1::mul(TruncSeries1(*F, a, 16), TruncSeries1(*F, b, 16), 16);
        for (std::size_t i = 0; i < lo.precision(); ++i) ASSERT_EQ(lo.coeff(i), hi.coeff(i));
        const TruncSeries1 inv_lo = TruncSeries1(*F, b, 8).inverse(8), inv_hi = TruncSeries1(*F, b, 16).inverse(16);
        for (std::size_t i = 0; i < 8; ++i) ASSERT_EQ(inv_lo.coeff(i), inv_hi.coeff(i));
        const TruncSeries1 one = TruncSeries1::mul(TruncSeries1(*F, b, 16), inv_hi, 16);
        for (std::size_t i = 0; i < 16; ++i) ASSERT_EQ(one.coeff(i), i == 0 ? F->one() : F->zero());
    }
}

TEST(SeriesProperty, HenselResidualVanishes) {
    std::mt19937_64 rng(9);
    for (u64 p : {2, 3, 5, 7}) {
        const FieldPtr F = make_field(p, 1);
        for (int t = 0; t < 20; ++t) {
            TruncSeries2 g(*F);
            g.add_term(0, 1, F->elem(1 + rng() % (p - 1)));
            for (u64 s = 1; s <= 4; ++s)
                for (u64 i = 0; i <= s; ++i)
                    if (s > 1 || i == 1) g.add_term(i, s - i, F->elem(rng() % p));
            const BranchParam b = hensel_parametrize(g, Axis::Two, 24);
            const Valuation v = substitute_branch(g, b).valuation();
            ASSERT_TRUE(v.is_infinite() || (v.is_indeterminate() && v.lower_bound() >= 24));
        }
    }
}

TEST(SeriesProperty, FrobeniusPowerMatchesRepeatedMultiplication) {
    const FieldPtr F = make_field(3, 2);
    const TruncSeries1 s(*F, {F->zero(), F->generator(), F->one(), F->elem(5)}, 12);
    EXPECT_EQ(to_string(s.pow(3, 40)), to_string(TruncSeries1::mul(TruncSeries1::mul(s, s, 40), s, 40)));
}
