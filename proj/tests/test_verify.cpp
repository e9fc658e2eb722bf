#include <gtest/gtest.h>

#include "pfrob/verify.hpp"

using namespace pfrob;

TEST(Verify, InformationalChecksDoNotAffectVerdict) {
    SuiteReport r{"x", {}, json::object()};
    r.add("a", 1, 1, true);
    r.add("b", 1, 2, false, true);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.first_failure(), nullptr);
    r.add("c", 1, 2, false);
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.first_failure()->name, "c");
    EXPECT_EQ(to_json(r)["first_failure"], "c");
}

TEST(Verify, SameSeedSameReport) {
    VerifyConfig cfg;
    cfg.p = 3;
    cfg.seed = 7;
    const std::string a = to_json(verify_corollary(cfg)).dump(), b = to_json(verify_corollary(cfg)).dump();
    EXPECT_EQ(a, b);
    cfg.seed = 8;
    EXPECT_NE(a, to_json(verify_corollary(cfg)).dump());
}

TEST(Verify, SsSuiteAtEleven) {
    VerifyConfig cfg;
    cfg.p = 11;
    const SuiteReport r = verify_ss(cfg);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.tables["loci"][0]["bruteforce"], json::array({"0", "1"}));
}

TEST(Verify, UnknownSuiteRejected) { EXPECT_THROW(run_suite("nope", VerifyConfig{}), Error); }
