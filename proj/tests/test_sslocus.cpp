#include <gtest/gtest.h>

#include "pfrob/parser.hpp"
#include "pfrob/sslocus.hpp"

using namespace pfrob;

namespace {
std::vector<std::string> names(const SSLocus &s) {
    std::vector<std::string> out;
    for (const auto &j : s.js) out.push_back(format_element(j));
    return out;
}
} // namespace

TEST(SSOracle, KnownLoci) {
    EXPECT_EQ(names(ss_bruteforce(5)), (std::vector<std::string>{"0"}));
    EXPECT_EQ(names(ss_bruteforce(11)), (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(names(ss_bruteforce(13)), (std::vector<std::string>{"5"}));
}

TEST(SSOracle, HassePolynomialAtFive) {
    const UniPoly h = hasse_polynomial(5);
    EXPECT_EQ(h, UniPoly::from_ints(h.ctx(), {1, 4, 1}));
}

TEST(SSProperty, MethodsAgreeAndLocusIsGaloisStable) {
    for (u64 p = 5; p <= 31; ++p) {
        if (!detail::is_prime(p)) continue;
        const SSLocus a = ss_bruteforce(p), b = ss_hasse(p);
        EXPECT_EQ(a.js, b.js) << p;
        // the count of supersingular j is about p/12
        EXPECT_LE(a.js.size(), p / 12 + 2) << p;
        const UniPoly f = a.polynomial();
        for (const auto &c : f.coeffs()) EXPECT_LT(c.index(), p);
    }
}

TEST(SSOracle, RejectsSmallAndComposite) {
    EXPECT_THROW(ss_bruteforce(3), Error);
    EXPECT_THROW(ss_hasse(9), Error);
}
