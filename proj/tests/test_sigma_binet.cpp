// The sigma-Binet pair: the Fibonacci digit sum s_F and the integer sequence
// c obtained from the Zeckendorf-supported Binet sum over the sixth root of
// unity, plus the conjecture sweeps built on them.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "diatomic/beatty.hpp"
#include "diatomic/fibonacci.hpp"
#include "diatomic/sigma_binet.hpp"
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

uint64_t fib_u(unsigned n) { return fib(n).convert_to<uint64_t>(); }

}  // namespace

TEST_CASE("s_F is the Zeckendorf digit sum") {
    const std::vector<unsigned> prefix = {0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2,
                                          2, 3, 1, 2, 2, 2, 3, 2, 3, 3};
    for (size_t n = 0; n < prefix.size(); ++n) {
        CHECK(s_f(n) == prefix[n]);
    }
    for (uint64_t n = 0; n <= 5000; ++n) {
        CHECK(s_f(n) == zeck_encode(BigInt(n)).popcount());
    }
    // invariance under rho, increment under the rho2-successor
    for (uint64_t n = 1; n <= 2000; ++n) {
        CHECK(s_f(rho_u64(n)) == s_f(n));
        CHECK(s_f(rho2_u64(n) + 1) == s_f(n) + 1);
    }
    SfTable sf;
    sf.ensure(5000);
    for (uint64_t n = 0; n <= 5000; ++n) {
        CHECK(sf.at(n) == s_f(n));
    }
}

TEST_CASE("c is integral and matches its frozen prefix") {
    const std::vector<int> prefix = {1, 1, 2, 3, 2, 4, 3, 3, 6, 4, 6, 6,
                                     4, 8, 6, 7, 10, 6, 9, 7, 5, 11, 8};
    SfTable sf;
    for (size_t i = 0; i < prefix.size(); ++i) {
        CHECK(c_sigma(i + 1, sf) == prefix[i]);
    }
    CHECK_THROWS_AS((void)c_sigma(0, sf), std::domain_error);

    CTable c;
    c.ensure(400, sf);
    CHECK(c.at(0) == 0);
    for (size_t i = 0; i < prefix.size(); ++i) {
        CHECK(c.at(i + 1) == prefix[i]);
    }
    for (uint64_t n = 1; n <= 400; ++n) {
        CHECK(c.at(n) == c_sigma(n, sf));
        CHECK(c.at(n) >= 1);
    }
}

TEST_CASE("crushed arrays over the Fibonacci block structure") {
    SfTable sf;
    const auto sf_rows = crushed_array_sf(7, sf);
    REQUIRE(sf_rows.size() == 7);
    CHECK(sf_rows[0] == (std::vector<uint32_t>{1}));
    CHECK(sf_rows[1] == (std::vector<uint32_t>{1}));
    CHECK(sf_rows[2] == (std::vector<uint32_t>{1, 2}));
    CHECK(sf_rows[3] == (std::vector<uint32_t>{1, 2, 2}));
    CHECK(sf_rows[4] == (std::vector<uint32_t>{1, 2, 2, 2, 3}));
    CHECK(sf_rows[5] == (std::vector<uint32_t>{1, 2, 2, 2, 3, 2, 3, 3}));
    CHECK(sf_rows[6] ==
          (std::vector<uint32_t>{1, 2, 2, 2, 3, 2, 3, 3, 2, 3, 3, 3, 4}));
    // columns are constant: row i+1 begins with row i shifted structure
    for (size_t i = 1; i < sf_rows.size(); ++i) {
        for (size_t k = 0; k < sf_rows[i - 1].size(); ++k) {
            CHECK(sf_rows[i][k] == sf_rows[i - 1][k]);
        }
    }
    // row i holds indices F_{i+1} .. F_{i+2} - 1
    for (size_t i = 0; i < sf_rows.size(); ++i) {
        CHECK(sf_rows[i].size() == fib_u(unsigned(i) + 1));
        for (size_t k = 0; k < sf_rows[i].size(); ++k) {
            CHECK(sf_rows[i][k] == s_f(fib_u(unsigned(i) + 2) + k));
        }
    }

    CTable c;
    const auto c_rows = crushed_array_c(7, sf, c);
    REQUIRE(c_rows.size() == 7);
    auto big = [](std::vector<int> v) {
        return std::vector<BigInt>(v.begin(), v.end());
    };
    CHECK(c_rows[0] == big({1}));
    CHECK(c_rows[1] == big({1}));
    CHECK(c_rows[2] == big({2, 3}));
    CHECK(c_rows[3] == big({2, 4, 3}));
    CHECK(c_rows[4] == big({3, 6, 4, 6, 6}));
    CHECK(c_rows[5] == big({4, 8, 6, 7, 10, 6, 9, 7}));
    CHECK(c_rows[6] == big({5, 11, 8, 11, 13, 8, 14, 10, 9, 15, 9, 13, 11}));
}

TEST_CASE("translation rules along Fibonacci blocks") {
    SfTable sf;
    CTable c;
    c.ensure(7000, sf);
    // Padovan-style rule at the block heads: c_{F_{n+2}} = c_{F_n} + c_{F_{n-1}}
    for (unsigned n = 3; n <= 18; ++n) {
        CHECK(c.at(fib_u(n + 2)) == c.at(fib_u(n)) + c.at(fib_u(n - 1)));
    }
    // the three-term translation rule with the c_0 = 0 convention
    for (unsigned n = 2; n <= 16; ++n) {
        for (uint64_t k = 0; k <= fib_u(n - 2); ++k) {
            CHECK(c.at(fib_u(n + 2) + k) ==
                  c.at(fib_u(n) + k) + c.at(k) + c.at(fib_u(n - 1) + k));
        }
    }
    // head identities: the first holds from n = 5 on and provably fails at
    // n = 4; the second holds from n = 3 on
    CHECK(c.at(fib_u(4)) + c.at(fib_u(3) + 2) != c.at(fib_u(4) + 1));
    for (unsigned n = 5; n <= 16; ++n) {
        CHECK(c.at(fib_u(n)) + c.at(fib_u(n - 1) + 2) == c.at(fib_u(n) + 1));
    }
    for (unsigned n = 3; n <= 16; ++n) {
        CHECK(c.at(fib_u(n) + 1) == c.at(fib_u(n + 1) + 2));
    }
}

TEST_CASE("conjecture sweeps come back clean") {
    SfTable sf;
    CTable c;
    const ConjectureReport rep = run_conjectures(300, sf, c);
    REQUIRE(rep.entries.size() == 4);
    CHECK(rep.entries[0].id == "i");
    CHECK(rep.entries[1].id == "ii");
    CHECK(rep.entries[2].id == "iii");
    CHECK(rep.entries[3].id == "iv");
    for (const auto& e : rep.entries) {
        CHECK(e.cases > 0);
        CHECK(e.violations.empty());
    }
    CHECK(rep.total_violations() == 0);
    CHECK_THROWS_AS((void)run_conjectures(20000, sf, c), std::range_error);
}

TEST_CASE("sigma-Binet verification suites pass at reduced bounds") {
    expect_suite("sf-recursion", 2000);
    expect_suite("sf-crushed", 10);
    expect_suite("c-integrality", 500);
    expect_suite("thm-5-1", 10);
    expect_suite("cor-5-2", 10);
    expect_suite("c-prefix", 10);
    expect_suite("conjectures", 300);
}
