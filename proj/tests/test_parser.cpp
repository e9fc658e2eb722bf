#include <gtest/gtest.h>

#include <random>

#include "pfrob/parser.hpp"

using namespace pfrob;

namespace {
Errc code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}
} // namespace

TEST(ParserOracle, Examples) {
    const FieldPtr F5 = make_field(5, 1), F2 = make_field(2, 1), F4 = make_field(2, 2);
    const TruncSeries2 a = parse_series2("t1^2*t2 + 3*t1 + 1", *F5);
    EXPECT_EQ(a.coeff(1, 0).index(), 3u);
    EXPECT_EQ(a.coeff(2, 1).index(), 1u);
    const BiPoly c = parse_bipoly("x1 - x2", *F5);
    EXPECT_EQ(c.deg_x1(), 1u);
    EXPECT_EQ(c.deg_x2(), 1u);
    EXPECT_EQ(to_string(parse_series2("(t1+t2)^2", *F2)), "t1^2 + t2^2");
    const BiPoly g = parse_bipoly("g*x1 + 1", *F4);
    EXPECT_EQ(g.coeff(1, 0), F4->generator());
    EXPECT_EQ(parse_series1("u^3 - u", *F5).valuation().value(), 1u);
}

TEST(ParserOracle, Errors) {
    const FieldPtr F = make_field(5, 1);
    try {
        parse_expr("t1 t2", *F);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.code(), Errc::SyntaxError);
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_EQ(code_of([&] { parse_expr("t1 + z", *F); }), Errc::UnknownVariable);
    EXPECT_EQ(code_of([&] { parse_expr("t1 + x1", *F, vars({Var::t1, Var::t2})); }), Errc::UnknownVariable);
    EXPECT_EQ(code_of([&] { parse_expr("t1^4294967296", *F); }), Errc::ExponentTooLarge);
    EXPECT_EQ(code_of([&] { parse_bipoly("t1 + x1", *F); }), Errc::VariableArityMismatch);
    EXPECT_EQ(code_of([&] { parse_expr("(t1 + 1", *F); }), Errc::SyntaxError);
}

TEST(ParserOracle, ScalarsReduceModP) {
    const FieldPtr F = make_field(5, 1);
    EXPECT_EQ(to_string(parse_bipoly("7*x1 + 10", *F)), "2*x1");
    EXPECT_EQ(to_string(parse_series1("-u - u^2", *F)), "4*u^2 + 4*u");
}

TEST(ParserProperty, RoundTrip) {
    std::mt19937_64 rng(31);
    for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {2, 2}, {3, 2}}) {
        const FieldPtr F = make_field(p, k);
        for (int t = 0; t < 100; ++t) {
            BiPoly f(*F);
            for (int i = 0; i < 6; ++i) f.add_term(rng() % 4, rng() % 4, F->elem(rng() % F->q()));
            if (f.is_zero()) continue;
            const std::string s = to_string(f);
            ASSERT_EQ(parse_bipoly(s, *F), f) << s;
            ASSERT_EQ(to_string(parse_bipoly(s, *F)), s);
        }
    }
}

TEST(ParserProperty, SumIsPointwise) {
    std::mt19937_64 rng(32);
    const FieldPtr F = make_field(7, 1);
    const std::vector<std::pair<std::string, std::string>> cases{
        {"x1^2*x2 + 3", "(x1 + 2)^3"}, {"x1*x2 - x2^2", "4*x1 + 5*x2^3"}, {"(x1 - x2)^7", "x1^7"}};
    for (const auto &[a, b] : cases) {
        const BiPoly fa = parse_bipoly(a, *F), fb = parse_bipoly(b, *F), fs = parse_bipoly(a + " + " + b, *F);
        for (int t = 0; t < 50; ++t) {
            const Fq x = F->elem(rng() % 7), y = F->elem(rng() % 7);
            ASSERT_EQ(fs(x, y), fa(x, y) + fb(x, y));
        }
    }
}
