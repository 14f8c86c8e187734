// The (+) operation, its conjugate, the b-sequence built from them, the pair
// bijection, and the associated singular function g.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "diatomic/oplus.hpp"
#include "diatomic/stern.hpp"
#include "diatomic/verify.hpp"
#include "diatomic/workspace.hpp"

using namespace diatomic;

namespace {

void expect_suite(const char* name, uint64_t bound = 0) {
    Workspace ws;
    VerifyOptions opt;
    opt.bound = bound;
    const SuiteResult r = verify_run(name, ws, opt);
    std::string detail = r.summary;
    for (const auto& e : r.examples) detail += "\n    " + e;
    CHECK_MESSAGE(r.failures == 0, std::string(name), ": ", detail);
}

// b_1..b_27
const std::vector<int> kBPrefix = {0, 0, 1, 0, 2, 1, 2,  0, 3, 2, 6, 1, 6, 2,
                                   3, 0, 4, 3, 10, 2, 15, 6, 12, 1, 12, 6, 15};

}  // namespace

TEST_CASE("oplus and ominus on exact radicands") {
    CHECK(oplus(BigInt(0), BigInt(5)) == 6);
    CHECK(oplus(BigInt(5), BigInt(0)) == 6);
    CHECK(oplus(BigInt(1), BigInt(2)) == 6);
    CHECK(oplus(BigInt(2), BigInt(6)) == 15);
    CHECK(ominus(BigInt(6), BigInt(2)) == 1);
    CHECK(ominus(BigInt(0), BigInt(0)) == -1);
    CHECK(ominus(BigInt(15), BigInt(6)) == 2);
    // (a (+) b) (-) b == a whenever a (+) b exists
    CHECK(ominus(oplus(BigInt(3), BigInt(10)), BigInt(10)) == 3);
    // product identity: (a (+) b)(a (-) b) == (a - b)^2 - 1
    CHECK(oplus(BigInt(2), BigInt(6)) * ominus(BigInt(2), BigInt(6)) ==
          (BigInt(2) - 6) * (BigInt(2) - 6) - 1);
    // 4ab + 1 must be a perfect square
    CHECK_THROWS_AS((void)oplus(BigInt(1), BigInt(1)), std::domain_error);
    CHECK_THROWS_AS((void)oplus(BigInt(1), BigInt(3)), std::domain_error);
    CHECK_THROWS_AS((void)oplus(BigInt(-1), BigInt(2)), std::domain_error);
}

TEST_CASE("generalized oplus for other discriminants") {
    CHECK(oplus_n_exact(BigInt(1), BigInt(1), BigInt(-3)) == 3);
    CHECK(oplus_n_exact(BigInt(0), BigInt(7), BigInt(1)) == 8);
    CHECK_THROWS_AS(
        (void)oplus_n_exact(BigInt(1), BigInt(1), BigInt(-2)),
        std::domain_error);  // radicand 4*1*1 - 2 = 2 is not a square

    CHECK(oplus_n(1.0, 1.0, -3.0) == doctest::Approx(3.0));
    const std::complex<double> z =
        oplus_n_complex({1.0, 0.0}, {1.0, 0.0}, {-9.0, 0.0});
    CHECK(z.real() == doctest::Approx(2.0));
    CHECK(z.imag() == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("b-sequence prefix, zeros, and the closed form") {
    for (size_t i = 0; i < kBPrefix.size(); ++i) {
        CHECK(b_value(BigInt(i + 1)) == kBPrefix[i]);
    }
    for (unsigned e = 0; e <= 16; ++e) {
        CHECK(b_value(pow2(e)) == 0);
    }
    for (int n = 1; n <= 512; ++n) {
        CHECK(b_closed(BigInt(n)) == b_value(BigInt(n)));
        if ((n & (n - 1)) != 0) {
            CHECK(b_value(BigInt(n)) != 0);  // zero only at powers of two
        }
    }
    // recurrences
    for (int n = 1; n <= 256; ++n) {
        CHECK(b_value(BigInt(2 * n)) == b_value(BigInt(n)));
        CHECK(b_value(BigInt(2 * n + 1)) ==
              oplus(b_value(BigInt(n)), b_value(BigInt(n + 1))));
    }
    CHECK_THROWS_AS((void)b_value(BigInt(0)), std::domain_error);
}

TEST_CASE("pair bijection for the b-sequence") {
    CHECK(b_pair(BigInt(1)) == BPair{0, 0});
    CHECK(b_pair(BigInt(5)) == BPair{2, 1});
    CHECK(b_pair_index(BigInt(2), BigInt(6)) == 10);
    CHECK(b_pair_index(BigInt(0), BigInt(0)) == 1);
    CHECK(b_pair_index(BigInt(0), BigInt(300)) == pow2(300));
    for (int n = 1; n <= 1000; ++n) {
        const BPair p = b_pair(BigInt(n));
        CHECK(p.left == b_value(BigInt(n)));
        CHECK(p.right == b_value(BigInt(n + 1)));
        CHECK(b_pair_index(p.left, p.right) == n);
    }
    // inverse pair map walks to the root and then stops
    const auto s1 = m_oplus(BPair{1, 2});
    REQUIRE(s1.has_value());
    CHECK(*s1 == BPair{1, 0});
    const auto s2 = m_oplus(*s1);
    REQUIRE(s2.has_value());
    CHECK(*s2 == BPair{0, 0});
    CHECK_FALSE(m_oplus(*s2).has_value());
    CHECK_THROWS_AS((void)m_oplus(BPair{3, 3}), std::domain_error);
    CHECK_THROWS_AS((void)b_pair_index(BigInt(1), BigInt(1)),
                    std::domain_error);
    CHECK(b_path(BigInt(2), BigInt(6)).replay_index() == 10);
}

TEST_CASE("coefficient splitting c = A a^2 + B b") {
    // A = 1, B = -1 gives the discriminant N = 4AB + B^2 = -3
    const std::vector<int> want = {1, 1, 3, 1, 7};
    for (size_t i = 0; i < want.size(); ++i) {
        CHECK(c_general(BigInt(1), BigInt(-1), BigInt(i + 1)) == want[i]);
    }
    for (int n = 1; n <= 256; ++n) {
        CHECK(c_general(BigInt(0), BigInt(1), BigInt(n)) == b_value(BigInt(n)));
        CHECK(c_general(BigInt(1), BigInt(0), BigInt(n)) ==
              stern(BigInt(n)) * stern(BigInt(n)));
    }
}

TEST_CASE("the singular function g on dyadics") {
    CHECK(g_value(Dyadic(1, 0)) == 1);  // removable point
    CHECK(g_value(Dyadic(3, 2)) == Rational(1, 2));
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(g_value(Dyadic(1, n)) == 0);
    }
    CHECK_THROWS_AS((void)g_value(Dyadic(0, 0)), std::domain_error);
}

TEST_CASE("oplus verification suites pass at reduced bounds") {
    expect_suite("oplus-algebra", 512);
    expect_suite("thm-3-6", 4096);
    expect_suite("prop-3-2", 2000);
    expect_suite("remark-3-3", 20);
    expect_suite("thm-3-11", 50);
    expect_suite("lemma-3-13", 2048);
    expect_suite("thm-3-14", 512);
    expect_suite("thm-3-16", 10);
    expect_suite("remark-3-19", 2000);
}
