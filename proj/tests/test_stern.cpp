// Stern's diatomic sequence: recurrences, the diatomic array, the bijection
// with positive reduced fractions, and the analytic side sequences.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diatomic/fibonacci.hpp"
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

}  // namespace

TEST_CASE("first values and the defining recurrences") {
    const std::vector<int> prefix = {0, 1, 1, 2, 1, 3, 2, 3, 1,
                                     4, 3, 5, 2, 5, 3, 4, 1, 5};
    for (size_t n = 0; n < prefix.size(); ++n) {
        CHECK(stern(BigInt(n)) == prefix[n]);
    }
    for (int n = 1; n <= 300; ++n) {
        CHECK(stern(BigInt(2 * n)) == stern(BigInt(n)));
        CHECK(stern(BigInt(2 * n + 1)) ==
              stern(BigInt(n)) + stern(BigInt(n + 1)));
        CHECK(stern(BigInt(2 * n - 1)) ==
              stern(BigInt(n)) + stern(BigInt(n - 1)));
    }
    CHECK_THROWS_AS((void)stern(BigInt(-1)), std::domain_error);
}

TEST_CASE("diatomic array rows and their sums") {
    CHECK(diatomic_row(0) == (std::vector<BigInt>{1, 1}));
    CHECK(diatomic_row(2) == (std::vector<BigInt>{1, 3, 2, 3, 1}));
    for (unsigned j = 0; j <= 10; ++j) {
        const auto row = diatomic_row(j);
        CHECK(row.size() == (size_t{1} << j) + 1);
        BigInt sum = 0;
        for (const BigInt& v : row) sum += v;
        BigInt p3 = 1;
        for (unsigned i = 0; i < j; ++i) p3 *= 3;
        CHECK(sum == p3 + 1);
        // row j lists a_{2^j} .. a_{2^{j+1}}
        for (size_t k = 0; k < row.size(); ++k) {
            CHECK(row[k] == stern(pow2(j) + BigInt(k)));
        }
    }
}

TEST_CASE("adjacent pairs are coprime and index back uniquely") {
    CHECK(stern_pair(BigInt(1)) == SternPair{1, 1});
    CHECK(stern_pair(BigInt(5)) == SternPair{3, 2});
    for (int n = 1; n <= 2000; ++n) {
        const SternPair p = stern_pair(BigInt(n));
        CHECK(p.left == stern(BigInt(n)));
        CHECK(p.right == stern(BigInt(n + 1)));
        CHECK(big_gcd(p.left, p.right) == 1);
        CHECK(stern_index(p.left, p.right) == n);
    }
    CHECK(stern_index(BigInt(3), BigInt(2)) == 5);
    CHECK(stern_index(BigInt(1), BigInt(199)) == pow2(198));
    CHECK(stern_index(BigInt(199), BigInt(1)) == pow2(199) - 1);
    CHECK_THROWS_AS((void)stern_path(BigInt(2), BigInt(4)), std::domain_error);
    CHECK_THROWS_AS((void)stern_path(BigInt(0), BigInt(1)), std::domain_error);
    // the branch record replays to the index
    CHECK(stern_path(BigInt(3), BigInt(2)).replay_index() == 5);
}

TEST_CASE("Fibonacci numbers sit at the Jacobsthal indices") {
    CHECK(jacobsthal(30) == 357913941);
    CHECK(jacobsthal(1) == 1);
    CHECK(jacobsthal(2) == 1);
    for (unsigned n = 1; n <= 24; ++n) {
        CHECK(stern(jacobsthal(n)) == fib(n));
    }
}

TEST_CASE("Binet analogue over sigma and the Pascal mod 2 diagonal") {
    for (uint64_t n = 0; n < 512; ++n) {
        const Eisenstein e = binet_sigma_stern(n);
        CHECK(e.si == 0);
        CHECK(e.re == stern(BigInt(n + 1)));
        CHECK(pascal_mod2_diagonal(n) == stern(BigInt(n + 1)));
    }
}

TEST_CASE("growth ratio along the Jacobsthal subsequence") {
    const double r = coons_tyler_ratio(357913941);  // index J(30)
    CHECK(std::fabs(r - 0.44721359549995793928) < 1e-6);
    // the sweep maximum on a small window is attained early
    const auto [mx, arg] = coons_tyler_max(2, 4096);
    CHECK(arg == 5);
    CHECK(mx > 0.4577);
    CHECK(mx < 0.4578);
}

TEST_CASE("exponential sum over reduced fractions collapses to Mertens") {
    const ExpSum empty = stern_exponential_sum(2);
    CHECK(empty.terms == 0);
    CHECK(empty.mertens == 0);
    CHECK(std::abs(empty.value) < 1e-12);

    const ExpSum s5 = stern_exponential_sum(5);
    CHECK(s5.mertens == -2);
    CHECK(std::abs(s5.value - std::complex<double>(-2.0, 0.0)) <
          1e-6 * std::max<double>(1.0, double(s5.terms)));

    const ExpSum s11 = stern_exponential_sum(11);
    CHECK(s11.mertens == -2);

    const auto mu = mobius_sieve(30);
    CHECK(mu[1] == 1);
    CHECK(mu[2] == -1);
    CHECK(mu[4] == 0);
    CHECK(mu[6] == 1);
    CHECK(mu[12] == 0);
    CHECK(mu[30] == -1);
    CHECK_THROWS_AS((void)stern_exponential_sum(1), std::domain_error);
}

TEST_CASE("stern verification suites pass at reduced bounds") {
    expect_suite("stern-recurrence", 4096);
    expect_suite("stern-bijection", 100);
    expect_suite("stern-paths", 2048);
    expect_suite("lemma-3-5", 10);
    expect_suite("jacobsthal", 25);
    expect_suite("modified-fib", 4096);
    expect_suite("sigma-binet-stern", 1024);
    expect_suite("pascal-mod2", 1024);
    expect_suite("mertens", 200);
}
