#include <gtest/gtest.h>

#include "pfrob/localint.hpp"
#include "pfrob/parser.hpp"
#include "pfrob/verify.hpp"

using namespace pfrob;

namespace {
TruncSeries2 s2(const char *src, const FieldCtx &F) { return parse_series2(src, F); }
TruncSeries1 s1(const char *src, const FieldCtx &F) { return parse_series1(src, F); }
Errc code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}
} // namespace

TEST(LocalOracle, BranchIntersectionNumber) {
    const FieldPtr F5 = make_field(5, 1), F7 = make_field(7, 1);
    EXPECT_EQ(branch_intersection_number(CurveGerm(s2("t1 - t2", *F5)), BranchParam(s1("u", *F5), s1("u^2", *F5))).value,
              1u);
    EXPECT_EQ(code_of([&] {
                  branch_intersection_number(CurveGerm(s2("t2^2 - t1^3", *F7)),
                                             BranchParam(s1("u^2", *F7), s1("u^3", *F7)));
              }),
              Errc::BranchOnCurve);
    EXPECT_EQ(
        branch_intersection_number(CurveGerm(s2("t2^2 - t1^3", *F7)), BranchParam(s1("u", *F7), s1("u", *F7))).value,
        2u);
}

TEST(LocalOracle, LinearAlgebraOracle) {
    const FieldPtr F5 = make_field(5, 1), F7 = make_field(7, 1);
    EXPECT_EQ(local_mult_oracle(s2("t1", *F5), s2("t2", *F5)).value, 1u);
    EXPECT_EQ(local_mult_oracle(s2("t2^2 - t1^3", *F7), s2("t2", *F7)).value, 3u);
    EXPECT_EQ(local_mult_oracle(s2("t2^2 - t1^3", *F5), s2("t2^2 + t1^3", *F5)).value, 6u);
    EXPECT_EQ(local_mult_oracle(s2("t2^2 - t1^3", *F7), s2("t2 - t1", *F7)).value, 2u);
    EXPECT_EQ(code_of([&] { local_mult_oracle(s2("t1*t2", *F5), s2("t2*(t1 + t2)", *F5)); }), Errc::CommonComponent);
}

TEST(LocalOracle, TwistedSequences) {
    const FieldPtr F5 = make_field(5, 1);
    const CurveGerm germ(s2("t2 - t1", *F5));
    const std::vector<u64> ns{0, 1, 2, 3, 4};
    const TwistReport c1 = twisted_intersection_sequence(germ, BranchParam(s1("u", *F5), s1("u^2", *F5)), Axis::One, ns);
    std::vector<std::size_t> v1;
    for (const auto &e : c1.entries) v1.push_back(e.mult.value);
    EXPECT_EQ(v1, (std::vector<std::size_t>{1, 2, 2, 2, 2}));
    EXPECT_EQ(c1.case_kind, 1);
    EXPECT_TRUE(c1.pass);

    const std::vector<u64> ns2{1, 2, 3};
    const TwistReport c2 =
        twisted_intersection_sequence(germ, BranchParam(s1("u", *F5), TruncSeries1(*F5)), Axis::One, ns2);
    std::vector<std::size_t> v2;
    for (const auto &e : c2.entries) v2.push_back(e.mult.value);
    EXPECT_EQ(v2, (std::vector<std::size_t>{5, 25, 125}));
    EXPECT_EQ(c2.case_kind, 2);
    EXPECT_TRUE(c2.pass);
}

TEST(LocalOracle, PrecisionGrowsToTheCap) {
    const FieldPtr F2 = make_field(2, 1);
    const std::vector<u64> ns{14};
    const TwistReport r = twisted_intersection_sequence(CurveGerm(s2("t2 - t1", *F2)),
                                                        BranchParam(s1("u", *F2), TruncSeries1(*F2)), Axis::One, ns);
    EXPECT_EQ(r.entries[0].mult.value, 16384u);
}

TEST(LocalOracle, AxisIntersections) {
    const FieldPtr F3 = make_field(3, 1), F5 = make_field(5, 1);
    const CurveGerm line(s2("t2 - t1", *F3));
    EXPECT_EQ(axis_intersection_numbers(line, Axis::Two, 2).value, 9u);
    EXPECT_EQ(axis_intersection_numbers(line, Axis::One, 2).value, 1u);
    EXPECT_EQ(axis_intersection_numbers(CurveGerm(s2("t2^2 - t1^3", *F5)), Axis::Two, 1).value, 15u);
    EXPECT_EQ(local_mult_oracle(s2("t2^2 - t1^15", *F5), s2("t2", *F5)).value, 15u);
}

TEST(LocalOracle, AxisContainmentRejected) {
    const FieldPtr F5 = make_field(5, 1);
    EXPECT_EQ(code_of([&] { CurveGerm(s2("t1*t2", *F5)).require_transverse(); }), Errc::AxisContainment);
}

TEST(LocalProperty, OracleEquivalenceSuite) {
    VerifyConfig cfg;
    cfg.seed = 11;
    const SuiteReport r = verify_oracle_equivalence(cfg, 25);
    for (const auto &c : r.checks)
        if (c.name.starts_with("agreement")) {
            EXPECT_TRUE(c.pass) << c.name << " " << c.actual.dump();
        }
}

TEST(LocalProperty, Case1StabilizesByTheBound) {
    VerifyConfig cfg;
    cfg.seed = 12;
    const SuiteReport r = verify_case1(cfg, 10);
    for (const auto &c : r.checks) EXPECT_TRUE(c.pass || c.name == "germs tested") << c.name << " " << c.actual.dump();
}

TEST(LocalProperty, CorollaryScaling) {
    VerifyConfig cfg;
    cfg.seed = 13;
    EXPECT_TRUE(verify_corollary(cfg, 52).pass());
}
