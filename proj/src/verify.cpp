#include "diatomic/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "diatomic/beatty.hpp"
#include "diatomic/bigint.hpp"
#include "diatomic/boxfn.hpp"
#include "diatomic/contfrac.hpp"
#include "diatomic/dyadic.hpp"
#include "diatomic/eisenstein.hpp"
#include "diatomic/fibonacci.hpp"
#include "diatomic/fibrep.hpp"
#include "diatomic/oplus.hpp"
#include "diatomic/sigma_binet.hpp"
#include "diatomic/stern.hpp"

namespace diatomic {
namespace {

constexpr double kPhi = 1.6180339887498948482;
constexpr double kInvSqrt5 = 0.44721359549995793928;

template <typename... Ts>
std::string cat(Ts&&... xs) {
    std::ostringstream os;
    (os << ... << xs);
    return os.str();
}

class Checker {
  public:
    explicit Checker(size_t cap = 8) : cap_(cap) {}

    template <typename F>
    void expect(bool ok, F&& what) {
        ++cases_;
        if (!ok) {
            ++failures_;
            if (examples_.size() < cap_) examples_.push_back(what());
        }
    }

    void absorb(const Checker& o) {
        cases_ += o.cases_;
        failures_ += o.failures_;
        for (const auto& e : o.examples_) {
            if (examples_.size() >= cap_) break;
            examples_.push_back(e);
        }
    }

    uint64_t cases() const { return cases_; }
    uint64_t failures() const { return failures_; }
    const std::vector<std::string>& examples() const { return examples_; }
    size_t cap() const { return cap_; }

  private:
    size_t cap_;
    uint64_t cases_ = 0;
    uint64_t failures_ = 0;
    std::vector<std::string> examples_;
};

template <typename Fn>
void expect_domain_error(Checker& ck, const std::string& what, Fn&& fn) {
    bool threw = false;
    try {
        (void)fn();
    } catch (const std::domain_error&) {
        threw = true;
    } catch (...) {
    }
    ck.expect(threw, [&] { return what + ": expected domain_error"; });
}

uint64_t bnd(const VerifyOptions& opt, uint64_t dflt) { return opt.bound ? opt.bound : dflt; }

uint64_t fib_u64(size_t n) { return fib(n).convert_to<uint64_t>(); }

// Partition [lo, hi] across opt.jobs threads; body(part, i) must only read shared
// state (tables pre-grown by the caller) and write its own Checker.  Part results
// are merged in chunk order, so output is identical for every job count.
template <typename Body>
void sweep(uint64_t lo, uint64_t hi, const VerifyOptions& opt, Checker& ck, Body&& body) {
    if (hi < lo) return;
    const uint64_t n = hi - lo + 1;
    unsigned jobs = opt.jobs ? opt.jobs : 1;
    if (jobs > 1) jobs = static_cast<unsigned>(std::min<uint64_t>(jobs, (n + 2047) / 2048));
    if (jobs <= 1) {
        for (uint64_t i = lo; i <= hi; ++i) body(ck, i);
        return;
    }
    std::vector<Checker> parts(jobs, Checker(ck.cap()));
    std::vector<std::thread> threads;
    const uint64_t chunk = (n + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        const uint64_t a = lo + t * chunk;
        if (a > hi) break;
        const uint64_t b = std::min(hi, a + chunk - 1);
        threads.emplace_back([&parts, t, a, b, &body] {
            for (uint64_t i = a; i <= b; ++i) body(parts[t], i);
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& p : parts) ck.absorb(p);
}

template <typename T>
void check_list(Checker& ck, const std::string& label, const std::vector<T>& got,
                const std::vector<long long>& want) {
    ck.expect(got.size() == want.size(),
              [&] { return cat(label, ": length ", got.size(), " != ", want.size()); });
    const size_t n = std::min(got.size(), want.size());
    for (size_t i = 0; i < n; ++i) {
        ck.expect(got[i] == T(want[i]),
                  [&] { return cat(label, "[", i, "] = ", got[i], " != ", want[i]); });
    }
}

// ---------------------------------------------------------------------------
// exact-core
// ---------------------------------------------------------------------------

void suite_isqrt(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 200000);
    note = cat("integer square roots certified on 0..", bound, " plus seeded 256-bit squares");
    for (uint64_t n = 0; n <= bound; ++n) {
        const IsqrtResult r = isqrt_exact(BigInt(n));
        const BigInt sq = r.root * r.root;
        ck.expect(sq <= n && (r.root + 1) * (r.root + 1) > n,
                  [&] { return cat("isqrt(", n, ") = ", r.root, " out of bracket"); });
        ck.expect(r.perfect == (sq == n),
                  [&] { return cat("isqrt(", n, "): perfect flag wrong"); });
        ck.expect(is_perfect_square(BigInt(n)) == (sq == n),
                  [&] { return cat("is_perfect_square(", n, ") wrong"); });
    }
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 200; ++i) {
        BigInt x = 0;
        for (int w = 0; w < 4; ++w) x = (x << 64) | BigInt(rng());
        const IsqrtResult sq = isqrt_exact(x * x);
        ck.expect(sq.perfect && sq.root == x,
                  [&] { return cat("isqrt of 256-bit square failed, x = ", x); });
        if (x > 0) {
            const IsqrtResult off = isqrt_exact(x * x + 1);
            ck.expect(!off.perfect && off.root == x,
                      [&] { return cat("isqrt(x^2+1) misclassified, x = ", x); });
        }
    }
    expect_domain_error(ck, "isqrt_exact(-1)", [] { return isqrt_exact(BigInt(-1)); });
}

void suite_cf_roundtrip(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 500);
    note = cat("continued-fraction encode/decode/alternate over all p/q, q <= ", bound);
    for (uint64_t q = 1; q <= bound; ++q) {
        for (uint64_t p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational x = Rational(BigInt(p), BigInt(q));
            const CFWord w = cf_encode(x);
            ck.expect(cf_decode(w) == x, [&] { return cat("cf roundtrip failed at ", p, "/", q); });
            ck.expect(!w.terms.empty(), [&] { return cat("empty cf at ", p, "/", q); });
            bool canonical = true;
            for (const BigInt& t : w.terms)
                if (t < 1) canonical = false;
            if (w.terms.size() > 1 && w.terms.back() < 2) canonical = false;
            ck.expect(canonical, [&] { return cat("non-canonical cf at ", p, "/", q); });
            if (p == q) {
                expect_domain_error(ck, "cf_alternate([1])", [&] { return cf_alternate(w); });
            } else {
                const CFWord a = cf_alternate(w);
                ck.expect(cf_decode(a) == x,
                          [&] { return cat("alternate cf value changed at ", p, "/", q); });
                ck.expect(a.terms != w.terms,
                          [&] { return cat("alternate cf identical at ", p, "/", q); });
                ck.expect(cf_alternate(a).terms == w.terms,
                          [&] { return cat("alternate not an involution at ", p, "/", q); });
                const size_t d = std::max(a.terms.size(), w.terms.size()) -
                                 std::min(a.terms.size(), w.terms.size());
                ck.expect(d == 1, [&] { return cat("alternate length gap != 1 at ", p, "/", q); });
            }
        }
    }
    ck.expect(cf_encode(Rational(1, 2)).terms == std::vector<BigInt>{BigInt(2)},
              [] { return std::string("cf(1/2) != [2]"); });
    ck.expect(cf_encode(Rational(2, 5)).terms == (std::vector<BigInt>{BigInt(2), BigInt(2)}),
              [] { return std::string("cf(2/5) != [2,2]"); });
    ck.expect(cf_encode(Rational(1, 1)).terms == std::vector<BigInt>{BigInt(1)},
              [] { return std::string("cf(1) != [1]"); });
}

void suite_zeck_roundtrip(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 100000);
    note = cat("Zeckendorf encode/decode/shift on 0..", bound);
    for (uint64_t n = 0; n <= bound; ++n) {
        const ZeckWord w = zeck_encode(BigInt(n));
        ck.expect(w.canonical(), [&] { return cat("zeck(", n, ") not canonical"); });
        bool adjacent = false;
        for (size_t j = 0; j + 1 < w.bits.size(); ++j)
            if (w.bits[j] && w.bits[j + 1]) adjacent = true;
        ck.expect(!adjacent, [&] { return cat("zeck(", n, ") has adjacent bits"); });
        ck.expect(w.value() == n, [&] { return cat("zeck value mismatch at ", n); });
        ck.expect(zeck_decode(w) == n, [&] { return cat("zeck decode mismatch at ", n); });
        if (n <= 5000) {
            ck.expect(w.popcount() == s_f(n),
                      [&] { return cat("zeck popcount != s_F at ", n); });
            BigInt shifted_expect = 0;
            for (size_t j = 0; j < w.bits.size(); ++j)
                if (w.bits[j]) shifted_expect += fib(j + 3);
            ck.expect(zeck_decode(w.shifted(1)) == shifted_expect,
                      [&] { return cat("zeck shift arithmetic wrong at ", n); });
        }
    }
    ck.expect(zeck_encode(BigInt(32)).render() == "1010100",
              [] { return std::string("zeck render of 32 wrong"); });
    ck.expect(zeck_encode(BigInt(0)).bits.empty(),
              [] { return std::string("zeck(0) not empty"); });
}

void suite_dyadic(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = std::min<uint64_t>(bnd(opt, 12), 20);
    note = cat("dyadic normalization and rational roundtrip, exponents 0..", bound);
    for (unsigned e = 0; e <= bound; ++e) {
        const uint64_t top = uint64_t(1) << e;
        for (uint64_t k = (e == 0 ? 0 : 1); k <= (e == 0 ? 1 : top - 1); k += (e == 0 ? 1 : 2)) {
            const Dyadic d(BigInt(k), e);
            ck.expect(d.num % 2 != 0 || d.exp == 0,
                      [&] { return cat("dyadic ", k, "/2^", e, " not normalized"); });
            ck.expect(d.value() == Rational(BigInt(k), pow2(e)),
                      [&] { return cat("dyadic value wrong at ", k, "/2^", e); });
            ck.expect(dyadic_from_rational(Rational(BigInt(k), pow2(e))) == d,
                      [&] { return cat("dyadic_from_rational mismatch at ", k, "/2^", e); });
            ck.expect(dyadic_from_rational(d.value()) == d,
                      [&] { return cat("dyadic roundtrip failed at ", k, "/2^", e); });
        }
    }
    ck.expect(Dyadic(BigInt(6), 3) == Dyadic(BigInt(3), 2),
              [] { return std::string("6/8 != 3/4 after normalization"); });
    ck.expect(Dyadic(BigInt(0), 7) == Dyadic(BigInt(0), 0),
              [] { return std::string("0/128 != 0"); });
    ck.expect(Dyadic(BigInt(1), 2) < Dyadic(BigInt(1), 1),
              [] { return std::string("1/4 < 1/2 ordering failed"); });
    expect_domain_error(ck, "dyadic_from_rational(1/3)",
                        [] { return dyadic_from_rational(Rational(1, 3)); });
}

void suite_eisenstein(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("sigma-basis ring axioms on ", bound, " seeded triples");
    const Eisenstein sigma = eis_sigma();
    const Eisenstein one{BigInt(1), BigInt(0)};
    ck.expect(sigma * sigma == sigma - one, [] { return std::string("sigma^2 != sigma - 1"); });
    ck.expect(sigma * eis_conj(sigma) == one, [] { return std::string("sigma * conj != 1"); });
    ck.expect(eis_conj(sigma) == Eisenstein{BigInt(1), BigInt(-1)},
              [] { return std::string("conj(sigma) != 1 - sigma"); });
    Eisenstein pw = one;
    for (long long k = 0; k <= 18; ++k) {
        ck.expect(sigma_pow(k) == pw, [&] { return cat("sigma_pow(", k, ") wrong"); });
        ck.expect(sigma_bar_pow(k) == eis_conj(pw),
                  [&] { return cat("sigma_bar_pow(", k, ") wrong"); });
        pw = pw * sigma;
    }
    ck.expect(sigma_pow(-1) == sigma_pow(5), [] { return std::string("sigma_pow(-1) wrong"); });
    ck.expect(sigma_pow(6) == one, [] { return std::string("sigma^6 != 1"); });
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long long> coef(-50, 50);
    for (uint64_t i = 0; i < bound; ++i) {
        const Eisenstein x{BigInt(coef(rng)), BigInt(coef(rng))};
        const Eisenstein y{BigInt(coef(rng)), BigInt(coef(rng))};
        const Eisenstein z{BigInt(coef(rng)), BigInt(coef(rng))};
        ck.expect((x * y) * z == x * (y * z), [&] { return cat("associativity failed: ", x.str()); });
        ck.expect(x * (y + z) == x * y + x * z,
                  [&] { return cat("distributivity failed: ", x.str()); });
        ck.expect(x * y == y * x, [&] { return cat("commutativity failed: ", x.str()); });
        ck.expect(eis_conj(x * y) == eis_conj(x) * eis_conj(y),
                  [&] { return cat("conj not multiplicative: ", x.str()); });
        const Eisenstein nm = x * eis_conj(x);
        ck.expect(nm.is_rational_integer() && nm.re == x.re * x.re + x.re * x.si + x.si * x.si,
                  [&] { return cat("norm wrong for ", x.str()); });
    }
}

// ---------------------------------------------------------------------------
// stern
// ---------------------------------------------------------------------------

void suite_stern_recurrence(Checker& ck, Workspace& ws, const VerifyOptions& opt,
                            std::string& note) {
    const uint64_t bound = bnd(opt, 65536);
    note = cat("diatomic recurrence, coprimality and row structure to n = ", bound);
    ws.stern.ensure(2 * bound + 2);
    const auto& a = ws.stern;
    ck.expect(a.at(0) == 0 && a.at(1) == 1, [] { return std::string("seed values wrong"); });
    for (uint64_t n = 1; n <= bound; ++n) {
        ck.expect(a.at(2 * n) == a.at(n), [&] { return cat("a(2n) != a(n) at n = ", n); });
        ck.expect(a.at(2 * n + 1) == a.at(n) + a.at(n + 1),
                  [&] { return cat("a(2n+1) != a(n)+a(n+1) at n = ", n); });
        ck.expect(big_gcd(a.at(n), a.at(n + 1)) == 1,
                  [&] { return cat("adjacent values not coprime at n = ", n); });
    }
    for (uint64_t n = 1; n <= std::min<uint64_t>(bound, 4096); ++n) {
        ck.expect(a.at(2 * n - 1) == a.at(n) + a.at(n - 1),
                  [&] { return cat("a(2n-1) != a(n)+a(n-1) at n = ", n); });
        ck.expect(stern(BigInt(n)) == a.at(n),
                  [&] { return cat("descent route disagrees with table at n = ", n); });
    }
    for (unsigned j = 0; j <= 12 && (uint64_t(1) << (j + 1)) <= 2 * bound; ++j) {
        const auto row = diatomic_row(j);
        const uint64_t lo = uint64_t(1) << j;
        ck.expect(row.size() == lo + 1, [&] { return cat("row ", j, " has wrong length"); });
        BigInt sum = 0;
        BigInt three = 1;
        for (unsigned t = 0; t < j; ++t) three *= 3;
        for (size_t k = 0; k < row.size(); ++k) {
            sum += row[k];
            ck.expect(row[k] == a.at(lo + k),
                      [&] { return cat("row ", j, " entry ", k, " mismatch"); });
            ck.expect(row[k] == row[row.size() - 1 - k],
                      [&] { return cat("row ", j, " not symmetric at ", k); });
        }
        ck.expect(sum == three + 1, [&] { return cat("row ", j, " sum != 3^", j, "+1"); });
    }
}

void suite_stern_bijection(Checker& ck, Workspace& ws, const VerifyOptions& opt,
                           std::string& note) {
    const uint64_t bound = bnd(opt, 200);
    note = cat("coprime pairs <-> indices, p+q <= ", bound, " and n <= 16384");
    ws.stern.ensure(16386);
    for (uint64_t q = 1; q < bound; ++q) {
        for (uint64_t p = 1; p + q <= bound; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const BigInt n = stern_index(BigInt(p), BigInt(q));
            const SternPair pr = stern_pair(n);
            ck.expect(pr.left == p && pr.right == q,
                      [&] { return cat("roundtrip failed for (", p, ",", q, ")"); });
        }
    }
    for (uint64_t n = 1; n <= 16384; ++n) {
        ck.expect(stern_index(ws.stern.at(n), ws.stern.at(n + 1)) == n,
                  [&] { return cat("index of (a(n),a(n+1)) != n at n = ", n); });
    }
    ck.expect(stern_index(BigInt(1), BigInt(199)) == pow2(198),
              [] { return std::string("index of (1,199) != 2^198"); });
    ck.expect(stern_index(BigInt(199), BigInt(1)) == pow2(199) - 1,
              [] { return std::string("index of (199,1) != 2^199-1"); });
    expect_domain_error(ck, "stern_path(2,4)", [] { return stern_path(BigInt(2), BigInt(4)); });
}

void suite_stern_paths(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 16384);
    note = cat("binary path replay for n <= ", bound);
    ws.stern.ensure(bound + 2);
    for (uint64_t n = 1; n <= std::min<uint64_t>(bound, 4096); ++n) {
        const SternPair pr = stern_pair(BigInt(n));
        ck.expect(pr.left == ws.stern.at(n) && pr.right == ws.stern.at(n + 1),
                  [&] { return cat("stern_pair(", n, ") disagrees with table"); });
    }
    for (uint64_t n = 1; n <= bound; ++n) {
        const PairPath path = stern_path(ws.stern.at(n), ws.stern.at(n + 1));
        ck.expect(path.bits.size() + 1 == std::bit_width(n),
                  [&] { return cat("path length != bit length at n = ", n); });
        ck.expect(path.replay_index() == n, [&] { return cat("path replay != n at n = ", n); });
    }
    ck.expect(stern_index(BigInt(3), BigInt(2)) == 5,
              [] { return std::string("index of (3,2) != 5"); });
}

void suite_lemma_3_5(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = std::min<uint64_t>(bnd(opt, 16), 24);
    note = cat("unimodularity a(m+1)a(n+1) - a(m)a(n) = 1 across levels j <= ", bound);
    ws.stern.ensure((uint64_t(1) << bound) + 1);
    const auto& a = ws.stern;
    for (unsigned j = 0; j <= bound; ++j) {
        const uint64_t top = uint64_t(1) << j;
        for (uint64_t m = 0; m < top; ++m) {
            const uint64_t n = top - 1 - m;
            ck.expect(a.at(m + 1) * a.at(n + 1) - a.at(m) * a.at(n) == 1,
                      [&] { return cat("failed at j = ", j, ", m = ", m); });
        }
    }
}

void suite_jacobsthal(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 30);
    note = cat("Jacobsthal positions carry Fibonacci values, n <= ", bound);
    ck.expect(jacobsthal(1) == 1 && jacobsthal(2) == 1,
              [] { return std::string("J(1), J(2) wrong"); });
    for (unsigned n = 1; n <= bound; ++n) {
        const BigInt j = jacobsthal(n);
        ck.expect(3 * j == pow2(n) - (n % 2 == 0 ? 1 : -1),
                  [&] { return cat("3 J(", n, ") != 2^n - (-1)^n"); });
        if (n >= 3) {
            ck.expect(j == jacobsthal(n - 1) + 2 * jacobsthal(n - 2),
                      [&] { return cat("Jacobsthal recurrence failed at n = ", n); });
        }
        if (n <= 40) {
            ck.expect(stern(j) == fib(n), [&] { return cat("a(J(", n, ")) != F(", n, ")"); });
        }
    }
    ck.expect(jacobsthal(30) == 357913941, [] { return std::string("J(30) != 357913941"); });
}

void suite_modified_fib(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 65536);
    note = cat("a(n+1) = a(n) + a(n-1) - 2 (a(n-1) mod a(n)) for n <= ", bound);
    ws.stern.ensure(bound + 2);
    const auto& a = ws.stern;
    sweep(1, bound, opt, ck, [&a](Checker& c, uint64_t n) {
        c.expect(a.at(n + 1) == a.at(n) + a.at(n - 1) - 2 * (a.at(n - 1) % a.at(n)),
                 [&] { return cat("modified recurrence failed at n = ", n); });
    });
}

void suite_sigma_binet_stern(Checker& ck, Workspace& ws, const VerifyOptions& opt,
                             std::string& note) {
    const uint64_t bound = bnd(opt, 4096);
    note = cat("binary sigma-Binet sum equals a(n+1) for n <= ", bound);
    ws.stern.ensure(bound + 2);
    const auto& a = ws.stern;
    sweep(0, bound, opt, ck, [&a](Checker& c, uint64_t n) {
        const Eisenstein e = binet_sigma_stern(n);
        c.expect(e.is_rational_integer() && e.re == a.at(n + 1),
                 [&] { return cat("sigma-Binet sum wrong at n = ", n, ": ", e.str()); });
    });
}

void suite_pascal_mod2(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 4096);
    note = cat("Pascal mod 2 diagonal sums equal a(n+1) for n <= ", bound);
    ws.stern.ensure(bound + 2);
    const auto& a = ws.stern;
    sweep(0, bound, opt, ck, [&a](Checker& c, uint64_t n) {
        c.expect(pascal_mod2_diagonal(n) == a.at(n + 1),
                 [&] { return cat("diagonal sum wrong at n = ", n); });
    });
}

void suite_coons_tyler(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, uint64_t(1) << 20);
    note = cat("growth ratio a(n)/(3n)^log2(phi): sweep over [2, ", bound,
               "], limit 1/sqrt(5) along Jacobsthal indices");
    ws.stern.ensure(bound + 2);
    ck.expect(std::abs(coons_tyler_ratio(357913941) - kInvSqrt5) <= 1e-6,
              [&] { return cat("ratio at J(30) = ", coons_tyler_ratio(357913941),
                               " not within 1e-6 of 1/sqrt(5)"); });
    if (bound >= 8) {
        const auto [mx, arg] = coons_tyler_max(2, bound);
        ck.expect(mx >= 0.4577 && mx <= 0.4578,
                  [&] { return cat("global max ", mx, " outside [0.4577, 0.4578]"); });
        ck.expect(arg == 5, [&] { return cat("global argmax ", arg, " != 5"); });
    }
    if (bound >= 4096) {
        const auto [mt, att] = coons_tyler_max(342, bound);
        ck.expect(mt >= 0.4472 && mt <= 0.4473,
                  [&] { return cat("tail max ", mt, " outside [0.4472, 0.4473]"); });
        ck.expect(att == 1365, [&] { return cat("tail argmax ", att, " != J(12) = 1365"); });
        sweep(2, bound, opt, ck, [](Checker& c, uint64_t n) {
            const double r = coons_tyler_ratio(n);
            const bool listed = n == 5 || n == 21 || n == 85 || n == 341;
            c.expect(r <= 0.4473 || listed,
                     [&] { return cat("unexpected ratio ", r, " > 0.4473 at n = ", n); });
            if (listed)
                c.expect(r > 0.4473, [&] { return cat("listed index ", n, " fails to exceed"); });
        });
    }
}

void suite_mertens(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = std::min<uint64_t>(bnd(opt, 500), 20000);
    note = cat("twisted exponential sum collapses to the Mertens function up to x = ", bound);
    const auto mu = mobius_sieve(std::max<uint64_t>(bound, 31) + 1);
    ck.expect(mu[1] == 1 && mu[2] == -1 && mu[3] == -1 && mu[4] == 0 && mu[6] == 1 &&
                  mu[12] == 0 && mu[30] == -1,
              [] { return std::string("mobius sieve spot values wrong"); });
    std::vector<uint64_t> probes{2, 5, 11, 100, 500, bound};
    probes.erase(std::remove_if(probes.begin(), probes.end(),
                                [&](uint64_t x) { return x > bound; }),
                 probes.end());
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (const uint64_t x : probes) {
        const ExpSum e = stern_exponential_sum(x);
        long long m = 0;
        for (uint64_t q = 2; q < x; ++q) m += mu[q];
        ck.expect(e.mertens == m, [&] { return cat("mertens(", x, ") != sieve sum"); });
        const double tol = 1e-6 * std::max<double>(1.0, double(e.terms));
        ck.expect(std::abs(e.value.real() - double(e.mertens)) <= tol,
                  [&] { return cat("sum at x = ", x, " drifts from Mertens: ", e.value.real(),
                                   " vs ", e.mertens); });
        ck.expect(std::abs(e.value.imag()) <= tol,
                  [&] { return cat("imaginary part not cancelling at x = ", x); });
    }
    const ExpSum e2 = stern_exponential_sum(2);
    ck.expect(e2.terms == 0 && e2.mertens == 0 && std::abs(e2.value) == 0.0,
              [] { return std::string("x = 2 should be the empty sum"); });
    ck.expect(stern_exponential_sum(5).mertens == -2,
              [] { return std::string("mertens(5) != -2"); });
    ck.expect(stern_exponential_sum(11).mertens == -2,
              [] { return std::string("mertens(11) != -2"); });
}

// ---------------------------------------------------------------------------
// box-functions
// ---------------------------------------------------------------------------

void suite_box_inverse(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = std::min<uint64_t>(bnd(opt, 12), 16);
    note = cat("question mark inverts the box function on dyadics of depth <= ", bound);
    ck.expect(conway_f(Dyadic(BigInt(0), 0)) == 0, [] { return std::string("f(0) != 0"); });
    ck.expect(conway_f(Dyadic(BigInt(1), 0)) == 1, [] { return std::string("f(1) != 1"); });
    ck.expect(question_mark(Rational(0)) == Dyadic(BigInt(0), 0),
              [] { return std::string("?(0) != 0"); });
    ck.expect(question_mark(Rational(1)) == Dyadic(BigInt(1), 0),
              [] { return std::string("?(1) != 1"); });
    for (unsigned e = 1; e <= bound; ++e) {
        for (uint64_t k = 1; k < (uint64_t(1) << e); k += 2) {
            const Dyadic d(BigInt(k), e);
            ck.expect(question_mark(conway_f(d)) == d,
                      [&] { return cat("?(f(", k, "/2^", e, ")) != identity"); });
        }
    }
}

void suite_box_monotone(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const unsigned depth = unsigned(std::min<uint64_t>(bnd(opt, 12), 16));
    note = cat("strict monotonicity: box on the 2^", depth, " grid, question mark on Farey 200");
    Rational prev = conway_f(Dyadic(BigInt(0), 0));
    for (uint64_t k = 1; k <= (uint64_t(1) << depth); ++k) {
        const Rational cur = conway_f(Dyadic(BigInt(k), depth));
        ck.expect(cur > prev, [&] { return cat("box not increasing at k = ", k); });
        prev = cur;
    }
    const uint64_t n = 200;
    uint64_t a = 0, b = 1, c = 1, d = n;
    Dyadic qprev = question_mark(Rational(0));
    while (c <= n) {
        const Dyadic qcur = question_mark(Rational(BigInt(c), BigInt(d)));
        ck.expect(qprev < qcur, [&] { return cat("question mark not increasing before ", c, "/", d); });
        qprev = qcur;
        const uint64_t k = (n + b) / d;
        const uint64_t c2 = k * c - a, d2 = k * d - b;
        a = c;
        b = d;
        c = c2;
        d = d2;
    }
}

void suite_box_symmetry(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::min<uint64_t>(bnd(opt, 10), 14));
    note = cat("reflection symmetry of the box function and diatomic rows to depth ", bound);
    ck.expect(conway_f(Dyadic(BigInt(1), 1)) == Rational(1, 2),
              [] { return std::string("f(1/2) != 1/2"); });
    for (unsigned e = 1; e <= bound; ++e) {
        const uint64_t top = uint64_t(1) << e;
        for (uint64_t k = 1; k < top; k += 2) {
            const Rational sum =
                conway_f(Dyadic(BigInt(k), e)) + conway_f(Dyadic(BigInt(top - k), e));
            ck.expect(sum == 1, [&] { return cat("f(x) + f(1-x) != 1 at ", k, "/2^", e); });
        }
    }
    ws.stern.ensure((uint64_t(1) << (bound + 1)) + 1);
    for (unsigned n = 0; n <= bound; ++n) {
        const uint64_t lo = uint64_t(1) << n;
        for (uint64_t k = 0; k <= lo; ++k) {
            ck.expect(ws.stern.at(lo + k) == ws.stern.at(2 * lo - k),
                      [&] { return cat("a(2^n + k) != a(2^(n+1) - k) at n = ", n, ", k = ", k); });
        }
    }
}

void suite_f_powers(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::min<uint64_t>(bnd(opt, 18), 24));
    note = cat("f(2^-j) = 1/(j+1) for j <= ", bound);
    for (unsigned j = 0; j <= bound; ++j) {
        ck.expect(conway_f(Dyadic(BigInt(1), j)) == Rational(1, j + 1),
                  [&] { return cat("f(2^-", j, ") != 1/", j + 1); });
    }
}

// ---------------------------------------------------------------------------
// oplus
// ---------------------------------------------------------------------------

void suite_oplus_algebra(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 4096);
    note = cat("oplus/ominus algebra along the b-sequence, k <= ", bound);
    ws.b.ensure(2 * bound + 2);
    const auto& b = ws.b;
    for (uint64_t k = 1; k <= bound; ++k) {
        const BigInt& x = b.at(k);
        const BigInt& y = b.at(k + 1);
        const BigInt z = oplus(x, y);
        ck.expect(z == b.at(2 * k + 1), [&] { return cat("b(k) oplus b(k+1) != b(2k+1) at k = ", k); });
        ck.expect(oplus(y, x) == z, [&] { return cat("oplus not commutative at k = ", k); });
        ck.expect(ominus(z, y) == x, [&] { return cat("(x oplus y) ominus y != x at k = ", k); });
        ck.expect(z * ominus(x, y) == (x - y) * (x - y) - 1,
                  [&] { return cat("product identity failed at k = ", k); });
        if (k <= 64) {
            ck.expect(oplus_n_exact(x, y, BigInt(1)) == z,
                      [&] { return cat("oplus_n_exact at N = 1 disagrees at k = ", k); });
        }
    }
    ck.expect(oplus(BigInt(0), BigInt(0)) == 1, [] { return std::string("0 oplus 0 != 1"); });
    ck.expect(ominus(BigInt(0), BigInt(0)) == -1, [] { return std::string("0 ominus 0 != -1"); });
    for (uint64_t v = 0; v <= 100; ++v) {
        ck.expect(oplus(BigInt(0), BigInt(v)) == v + 1,
                  [&] { return cat("0 oplus ", v, " != ", v + 1); });
    }
    ck.expect(oplus(BigInt(3), BigInt(10)) == 24, [] { return std::string("3 oplus 10 != 24"); });
    ck.expect(ominus(BigInt(24), BigInt(10)) == 3, [] { return std::string("24 ominus 10 != 3"); });
    expect_domain_error(ck, "oplus(1,1)", [] { return oplus(BigInt(1), BigInt(1)); });
    expect_domain_error(ck, "oplus(-1,2)", [] { return oplus(BigInt(-1), BigInt(2)); });
    expect_domain_error(ck, "ominus(2,2)", [] { return ominus(BigInt(2), BigInt(2)); });
    ck.expect(std::abs(oplus_n(3.0, 10.0, 1.0) - 24.0) <= 1e-9,
              [] { return std::string("floating oplus at (3,10) drifts"); });
    const std::complex<double> zc =
        oplus_n_complex({3.0, 0.0}, {10.0, 0.0}, {1.0, 0.0});
    ck.expect(std::abs(zc - std::complex<double>(24.0, 0.0)) <= 1e-9,
              [] { return std::string("complex oplus at (3,10) drifts"); });
    const std::complex<double> zn =
        oplus_n_complex({1.0, 0.0}, {1.0, 0.0}, {-9.0, 0.0});
    ck.expect(std::abs(zn - std::complex<double>(2.0, std::sqrt(5.0))) <= 1e-9,
              [] { return std::string("complex branch at radicand -5 wrong"); });
    ck.expect(oplus_n_exact(BigInt(1), BigInt(1), BigInt(-3)) == 3,
              [] { return std::string("1 oplus_{-3} 1 != 3"); });
    const BigInt q3 = 2 * (BigInt(1) + 1 + 9) - BigInt(5) * 5;
    ck.expect(q3 == -3, [] { return std::string("quadratic form at (1,1,3) != -3"); });
}

void suite_thm_3_6(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 65536);
    note = cat("b(k) equals the closed two-factor form for k <= ", bound);
    ws.b.ensure(bound + 2);
    const auto& b = ws.b;
    sweep(1, bound, opt, ck, [&b](Checker& c, uint64_t k) {
        c.expect(b.at(k) >= 0, [&] { return cat("b(", k, ") negative"); });
        c.expect(b.at(k) == b_closed(BigInt(k)),
                 [&] { return cat("closed form disagrees at k = ", k); });
        c.expect((b.at(k) == 0) == ((k & (k - 1)) == 0),
                 [&] { return cat("zero locus wrong at k = ", k); });
        if (k <= 2048) {
            c.expect(b_value(BigInt(k)) == b.at(k),
                     [&] { return cat("descent route disagrees at k = ", k); });
        }
    });
}

void suite_prop_3_2(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("(ac) oplus (bd) = (a+b)(c+d) on ", bound, " seeded unimodular quadruples");
    std::mt19937_64 rng(opt.seed);
    uint64_t p1 = 1, q1 = 2, p2 = 1, q2 = 1;
    for (uint64_t i = 0; i < bound; ++i) {
        const uint64_t pm = p1 + p2, qm = q1 + q2;
        if (pm > 10000 || qm > 10000) {
            p1 = 1;
            q1 = 2;
            p2 = 1;
            q2 = 1;
        } else if (rng() & 1) {
            p1 = pm;
            q1 = qm;
        } else {
            p2 = pm;
            q2 = qm;
        }
        const BigInt a(p1), bq(p2), c(q1), d(q2);
        ck.expect(bq * c - a * d == 1,
                  [&] { return cat("walk lost unimodularity at (", a, ",", bq, ",", c, ",", d, ")"); });
        ck.expect(oplus(a * c, bq * d) == (a + bq) * (c + d),
                  [&] { return cat("identity failed at (", a, ",", bq, ",", c, ",", d, ")"); });
    }
    expect_domain_error(ck, "oplus(1*1, 3*1) with |ad-bc| = 2",
                        [] { return oplus(BigInt(1), BigInt(3)); });
}

void suite_remark_3_3(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = std::min<uint64_t>(bnd(opt, 30), 60);
    note = cat("x(n) = F(n) F(n+1) satisfies the oplus recurrence for n <= ", bound);
    for (uint64_t n = 2; n <= bound; ++n) {
        ck.expect(oplus(fib(n - 1) * fib(n), fib(n) * fib(n + 1)) == fib(n + 1) * fib(n + 2),
                  [&] { return cat("oplus recurrence failed at n = ", n); });
        ck.expect(fib(n - 1) * fib(n + 1) == fib(n) * fib(n) + (n % 2 == 0 ? 1 : -1),
                  [&] { return cat("Catalan-style identity failed at n = ", n); });
    }
}

void suite_thm_3_9(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::min<uint64_t>(bnd(opt, 12), 16));
    note = cat("g on dyadics of depth <= ", bound, " via the interval formula");
    ck.expect(g_value(Dyadic(BigInt(1), 0)) == 1,
              [] { return std::string("g(1) != 1 (removable point)"); });
    for (unsigned n = 1; n <= bound; ++n) {
        for (uint64_t k = 1; k < (uint64_t(1) << n); k += 2) {
            const unsigned j = (k == 1) ? n : n - 1 - unsigned(std::bit_width(k) - 1);
            const Rational x(BigInt(k), pow2(n));
            const Rational arg1 = x * pow2(j + 1) - 1;
            ck.expect(arg1 >= 0 && arg1 <= 1,
                      [&] { return cat("interval selection off at k = ", k, ", n = ", n); });
            Rational expected = conway_f(dyadic_from_rational(arg1));
            if (j > 0) {
                const Rational f2x = conway_f(dyadic_from_rational(x * 2));
                expected *= Rational(1) - Rational(j) * f2x;
            }
            ck.expect(g_value(Dyadic(BigInt(k), n)) == expected,
                      [&] { return cat("g mismatch at ", k, "/2^", n); });
        }
        ck.expect(g_value(Dyadic(BigInt(1), n)) == 0,
                  [&] { return cat("g(2^-", n, ") != 0"); });
    }
}

void suite_cor_3_10(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::min<uint64_t>(bnd(opt, 12), 16));
    note = cat("g(x) = f(2x - 1) on [1/2, 1] for dyadics of depth <= ", bound);
    for (unsigned n = 1; n <= bound; ++n) {
        const uint64_t top = uint64_t(1) << n;
        for (uint64_t k = top / 2; k <= top; ++k) {
            const Rational arg(BigInt(2 * k - top), pow2(n));
            ck.expect(g_value(Dyadic(BigInt(k), n)) == conway_f(dyadic_from_rational(arg)),
                      [&] { return cat("g != f(2x-1) at ", k, "/2^", n); });
        }
    }
}

void suite_thm_3_11(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 300);
    note = cat("admissible pairs <-> indices, entries <= ", bound, " and n <= 16384");
    ws.b.ensure(16386);
    for (uint64_t x = 0; x <= bound; ++x) {
        for (uint64_t y = 0; y <= bound; ++y) {
            if (!is_perfect_square(4 * BigInt(x) * BigInt(y) + 1)) continue;
            const BigInt n = b_pair_index(BigInt(x), BigInt(y));
            const BPair pr = b_pair(n);
            ck.expect(pr.left == x && pr.right == y,
                      [&] { return cat("roundtrip failed for (", x, ",", y, ")"); });
        }
    }
    for (uint64_t n = 1; n <= 16384; ++n) {
        ck.expect(b_pair_index(ws.b.at(n), ws.b.at(n + 1)) == n,
                  [&] { return cat("index of (b(n),b(n+1)) != n at n = ", n); });
    }
    const BPair five = b_pair(BigInt(5));
    ck.expect(five.left == 2 && five.right == 1, [] { return std::string("pair at 5 != (2,1)"); });
    const PairPath path26 = b_path(BigInt(2), BigInt(6));
    ck.expect(path26.bits.size() == 3 && path26.replay_index() == 10,
              [] { return std::string("path of (2,6) does not replay to 10"); });
    ck.expect(b_pair_index(BigInt(0), BigInt(300)) == pow2(300),
              [] { return std::string("index of (0,300) != 2^300"); });
    const auto s1 = m_oplus(BPair{BigInt(1), BigInt(2)});
    ck.expect(s1 && *s1 == BPair{BigInt(1), BigInt(0)},
              [] { return std::string("m_oplus(1,2) != (1,0)"); });
    const auto s2 = m_oplus(BPair{BigInt(1), BigInt(0)});
    ck.expect(s2 && *s2 == BPair{BigInt(0), BigInt(0)},
              [] { return std::string("m_oplus(1,0) != (0,0)"); });
    ck.expect(!m_oplus(BPair{BigInt(0), BigInt(0)}).has_value(),
              [] { return std::string("m_oplus(0,0) should stop"); });
    expect_domain_error(ck, "b_path(2,2)", [] { return b_path(BigInt(2), BigInt(2)); });
    expect_domain_error(ck, "b_path(1,1)", [] { return b_path(BigInt(1), BigInt(1)); });
    expect_domain_error(ck, "b_path(1,3)", [] { return b_path(BigInt(1), BigInt(3)); });
}

void suite_lemma_3_13(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 16384);
    note = cat("product identity tying a and b along adjacent pairs, k <= ", bound);
    ws.b.ensure(2 * bound + 2);
    ws.stern.ensure(bound + 2);
    const auto& a = ws.stern;
    const auto& b = ws.b;
    sweep(1, bound, opt, ck, [&a, &b](Checker& c, uint64_t k) {
        const IsqrtResult rad = isqrt_exact(4 * b.at(k) * b.at(k + 1) + 1);
        c.expect(rad.perfect, [&] { return cat("radicand not square at k = ", k); });
        c.expect(rad.root == b.at(2 * k + 1) - b.at(k) - b.at(k + 1),
                 [&] { return cat("root != b(2k+1) - b(k) - b(k+1) at k = ", k); });
        c.expect(a.at(k) * a.at(k) * b.at(k + 1) + a.at(k + 1) * a.at(k + 1) * b.at(k) + 1 ==
                     a.at(k) * a.at(k + 1) * rad.root,
                 [&] { return cat("product identity failed at k = ", k); });
    });
}

void suite_thm_3_14(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 4096);
    note = cat("c = A a^2 + B b satisfies the oplus_N recurrence, n <= ", bound,
               ", (A,B) in {(1,-1),(2,3),(0,1),(1,0)}");
    ws.stern.ensure(2 * bound + 2);
    ws.b.ensure(2 * bound + 2);
    const std::vector<std::pair<long long, long long>> params{{1, -1}, {2, 3}, {0, 1}, {1, 0}};
    for (const auto& [av, bv] : params) {
        const BigInt A(av), B(bv);
        const BigInt N = 4 * A * B + B * B;
        std::vector<BigInt> c(2 * bound + 2);
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = A * ws.stern.at(i) * ws.stern.at(i) + B * ws.b.at(i);
        ck.expect(c[1] == A && c[2] == A,
                  [&] { return cat("c(1), c(2) != A for (A,B) = (", av, ",", bv, ")"); });
        for (uint64_t n = 1; n <= bound; ++n) {
            ck.expect(c[2 * n] == c[n],
                      [&] { return cat("c(2n) != c(n) at n = ", n, ", (A,B) = (", av, ",", bv, ")"); });
            ck.expect(is_perfect_square(4 * c[n] * c[n + 1] + N),
                      [&] { return cat("radicand not square at n = ", n, ", (A,B) = (", av, ",",
                                       bv, ")"); });
            ck.expect(c[2 * n + 1] == oplus_n_exact(c[n], c[n + 1], N),
                      [&] { return cat("c(2n+1) != oplus_N at n = ", n, ", (A,B) = (", av, ",", bv,
                                       ")"); });
        }
        for (uint64_t n = 1; n <= std::min<uint64_t>(bound, 256); ++n) {
            ck.expect(c_general(A, B, BigInt(n)) == c[n],
                      [&] { return cat("c_general disagrees at n = ", n); });
        }
    }
    ws.b.ensure(12);
    const std::vector<long long> prefix{1, 1, 3, 1, 7};
    for (size_t i = 0; i < prefix.size(); ++i) {
        ck.expect(c_general(BigInt(1), BigInt(-1), BigInt(i + 1)) == prefix[i],
                  [&] { return cat("(1,-1) prefix wrong at n = ", i + 1); });
    }
}

void suite_thm_3_16(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::min<uint64_t>(bnd(opt, 14), 20));
    note = cat("b(2^(j+1) + k) = a(k)^2 + b(2^j + k) for j <= ", bound);
    ws.b.ensure(3 * (uint64_t(1) << bound) + 1);
    ws.stern.ensure((uint64_t(1) << bound) + 1);
    for (unsigned j = 0; j <= bound; ++j) {
        const uint64_t lo = uint64_t(1) << j;
        for (uint64_t k = 0; k < lo; ++k) {
            ck.expect(ws.b.at(2 * lo + k) == ws.stern.at(k) * ws.stern.at(k) + ws.b.at(lo + k),
                      [&] { return cat("failed at j = ", j, ", k = ", k); });
        }
    }
}

void suite_remark_3_19(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("2(x^2+y^2+z^2) - (x+y+z)^2 = 1 on consecutive b-triples, k <= ", bound);
    ws.b.ensure(2 * bound + 2);
    const auto& b = ws.b;
    sweep(1, bound, opt, ck, [&b](Checker& c, uint64_t k) {
        const BigInt& x = b.at(k);
        const BigInt& y = b.at(k + 1);
        const BigInt& z = b.at(2 * k + 1);
        c.expect(2 * (x * x + y * y + z * z) - (x + y + z) * (x + y + z) == 1,
                 [&] { return cat("form != 1 at k = ", k); });
        if (k <= 100) {
            const BigInt z2 = ominus(x, y);
            c.expect(2 * (x * x + y * y + z2 * z2) - (x + y + z2) * (x + y + z2) == 1,
                     [&] { return cat("form != 1 on the conjugate root at k = ", k); });
        }
    });
}

// ---------------------------------------------------------------------------
// fibrep
// ---------------------------------------------------------------------------

void suite_r_oracle(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 100000);
    note = cat("three independent routes to R agree up to n = ", bound);
    const auto dp = r_table_dp(bound);
    ws.r.ensure(bound);
    for (uint64_t n = 0; n <= bound; ++n) {
        ck.expect(ws.r.at(n) == dp[n], [&] { return cat("table != dp at n = ", n); });
    }
    sweep(0, std::min<uint64_t>(bound, 20000), opt, ck, [&dp](Checker& c, uint64_t n) {
        c.expect(r_count_recursive(n) == dp[n], [&] { return cat("recursive != dp at n = ", n); });
    });
    for (uint64_t n = 0; n <= std::min<uint64_t>(bound, 512); ++n) {
        ck.expect(r_count(n) == dp[n], [&] { return cat("single-shot != dp at n = ", n); });
    }
    check_list(ck, "R prefix", std::vector<BigInt>(dp.begin(), dp.begin() + 21),
               {1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3, 3, 2, 4, 2, 3, 3, 1});
    for (size_t n = 2; n <= 25 && fib_u64(n) <= bound; ++n) {
        ck.expect(dp[fib_u64(n)] == BigInt(n / 2),
                  [&] { return cat("R(F(", n, ")) != floor(", n, "/2)"); });
    }
}

void suite_thm_4_2(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("Zeckendorf shift equals the certified floor of n phi, n <= ", bound);
    sweep(0, bound, opt, ck, [](Checker& c, uint64_t n) {
        const BigInt bn(n);
        const BigInt r = rho(bn);
        c.expect(r == floor_mult_phi(bn + 1) - 1,
                 [&] { return cat("rho(", n, ") != floor((n+1) phi) - 1"); });
        c.expect(rho_u64(n) == r, [&] { return cat("rho_u64 disagrees at n = ", n); });
        c.expect(rho2(bn) == r + bn, [&] { return cat("rho2 != rho + n at n = ", n); });
        c.expect(rho2_u64(n) == rho2(bn), [&] { return cat("rho2_u64 disagrees at n = ", n); });
        c.expect(t_shift(bn) == rho(bn + 1) - 1,
                 [&] { return cat("T(", n, ") != rho(n+1) - 1"); });
        c.expect(t_u64(n) == t_shift(bn), [&] { return cat("t_u64 disagrees at n = ", n); });
        c.expect(floor_phi_sq(bn) == floor_phi(bn) + bn,
                 [&] { return cat("floor(n phi^2) != floor(n phi) + n at n = ", n); });
    });
    std::vector<BigInt> rho2_list, t_list;
    for (uint64_t n = 0; n <= 9; ++n) {
        rho2_list.push_back(rho2(BigInt(n)));
        t_list.push_back(t_shift(BigInt(n)));
    }
    check_list(ck, "rho2 prefix", rho2_list, {0, 3, 5, 8, 11, 13, 16, 18, 21, 24});
    check_list(ck, "T prefix", t_list, {1, 2, 4, 6, 7, 9, 10, 12, 14, 15});
}

void suite_thm_4_3(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("R at shifted positions, and every n >= 1 classifies as rho2 or T, n <= ", bound);
    ws.r.ensure(rho2_u64(bound) + 2);
    const auto& r = ws.r;
    sweep(1, bound, opt, ck, [&r](Checker& c, uint64_t m) {
        c.expect(r.at(rho2_u64(m)) == r.at(m) + r.at(m - 1),
                 [&] { return cat("R(rho2(m)) != R(m) + R(m-1) at m = ", m); });
        c.expect(r.at(t_u64(m)) == r.at(m), [&] { return cat("R(T(m)) != R(m) at m = ", m); });
        const ShiftClass cls = classify_shift(BigInt(m));
        const BigInt back = cls.is_rho2 ? rho2(cls.m) : t_shift(cls.m);
        c.expect(back == m, [&] { return cat("classification does not reconstruct ", m); });
    });
    ck.expect(ws.r.at(t_u64(0)) == ws.r.at(0), [] { return std::string("R(T(0)) != R(0)"); });
}

void suite_beatty_partition(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("floor(n phi) and floor(n phi^2) tile the positive integers, n <= ", bound);
    const BigInt top = floor_phi(BigInt(bound));
    BigInt i = 1, j = 1;
    for (BigInt v = 1; v <= top; ++v) {
        const BigInt va = floor_phi(i);
        const BigInt vb = floor_phi_sq(j);
        ck.expect(!(va == v && vb == v), [&] { return cat("both sequences hit ", v); });
        if (va == v) {
            ++i;
        } else if (vb == v) {
            ++j;
        } else {
            ck.expect(false, [&] { return cat("neither sequence hits ", v); });
        }
    }
}

void suite_alpha_beta(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 5000);
    note = cat("index-shifted R identities at the two Beatty positions, 1 <= n <= ", bound,
               " (the unshifted pair appears in the acceptance report)");
    ws.r.ensure(rho2_u64(bound) + 3);
    const auto& r = ws.r;
    sweep(1, bound, opt, ck, [&r](Checker& c, uint64_t n) {
        const BigInt al = alpha_beatty(BigInt(n));
        const BigInt be = beta_beatty(BigInt(n));
        c.expect(al == t_shift(BigInt(n - 1)), [&] { return cat("alpha(n) != T(n-1) at n = ", n); });
        c.expect(be == rho2(BigInt(n)) + 1, [&] { return cat("beta(n) != rho2(n) + 1 at n = ", n); });
        const uint64_t au = al.convert_to<uint64_t>();
        const uint64_t bu = be.convert_to<uint64_t>();
        c.expect(r.at(au) == r.at(n - 1), [&] { return cat("R(alpha(n)) != R(n-1) at n = ", n); });
        c.expect(r.at(bu - 1) == r.at(n - 1) + r.at(n),
                 [&] { return cat("R(beta(n)-1) != R(n-1) + R(n) at n = ", n); });
    });
}

void suite_triple_rho(Checker& ck, Workspace&, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("rho(rho(rho(n)+1)) = rho(rho(rho(n))+1) + 1 for n <= ", bound);
    sweep(0, bound, opt, ck, [](Checker& c, uint64_t n) {
        const uint64_t a = rho_u64(n);
        const uint64_t lhs = rho_u64(rho_u64(a + 1));
        const uint64_t rhs = rho_u64(rho_u64(a) + 1) + 1;
        c.expect(lhs == rhs, [&] { return cat("triple-rho identity failed at n = ", n); });
    });
}

void suite_lemma_4_4(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned depth = unsigned(std::min<uint64_t>(bnd(opt, 12), 16));
    note = cat("path-count graph to depth ", depth, ": row censuses, ordering, counts");
    const GraphG g = graph_g(depth);
    ws.r.ensure(fib_u64(depth + 3));
    const auto& r = ws.r;
    ck.expect(g.depth == depth, [&] { return cat("depth field ", g.depth, " != ", depth); });
    std::vector<std::vector<const GraphVertex*>> rows(depth + 2);
    bool rows_ok = true;
    for (const auto& v : g.vertices) {
        if (v.row < 1 || v.row > depth + 1) {
            rows_ok = false;
            continue;
        }
        rows[v.row].push_back(&v);
    }
    ck.expect(rows_ok, [] { return std::string("vertex with out-of-range row"); });
    for (unsigned row = 1; row <= depth + 1; ++row) {
        const uint64_t want = fib_u64(row + 2) - 1;
        ck.expect(rows[row].size() == want,
                  [&] { return cat("row ", row, " census ", rows[row].size(), " != ", want); });
        BigInt total = 0;
        for (size_t idx = 0; idx < rows[row].size(); ++idx) {
            const GraphVertex* v = rows[row][idx];
            ck.expect(v->value == idx, [&] { return cat("row ", row, " values not consecutive"); });
            if (idx > 0) {
                ck.expect(rows[row][idx - 1]->x < v->x,
                          [&] { return cat("row ", row, " x-order broken at ", idx); });
            }
            total += v->paths;
            if (v->value + 1 <= fib_u64(row + 1)) {
                ck.expect(v->paths == r.at(v->value),
                          [&] { return cat("paths(", row, ",", v->value, ") != R(", v->value, ")"); });
            }
        }
        ck.expect(total == pow2(row - 1),
                  [&] { return cat("row ", row, " path total != 2^", row - 1); });
    }
    std::vector<unsigned> outdeg(g.vertices.size(), 0);
    for (const auto& [pi, ci] : g.edges) {
        const GraphVertex& p = g.vertices[pi];
        const GraphVertex& c = g.vertices[ci];
        ++outdeg[pi];
        ck.expect(c.row == p.row + 1, [&] { return cat("edge skips a row at (", p.row, ",", p.value, ")"); });
        ck.expect(c.value == rho_u64(p.value) || c.value == rho_u64(p.value) + 1,
                  [&] { return cat("child of (", p.row, ",", p.value, ") not a rho shift"); });
        const double step = std::pow(kPhi, -double(p.row - 1));
        ck.expect(std::abs(std::abs(c.x - p.x) - step) <= 1e-9,
                  [&] { return cat("edge x-step wrong at (", p.row, ",", p.value, ")"); });
        ck.expect(std::abs((p.y - c.y) - step) <= 1e-9,
                  [&] { return cat("edge y-step wrong at (", p.row, ",", p.value, ")"); });
    }
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].row <= depth) {
            ck.expect(outdeg[i] == 2,
                      [&] { return cat("vertex in row ", g.vertices[i].row, " lacks two children"); });
        } else {
            ck.expect(outdeg[i] == 0, [] { return std::string("leaf row has out-edges"); });
        }
    }
    const GraphVertex* apex = g.find(1, 0);
    ck.expect(apex && apex->x == 0.0 && apex->y == 0.0 && apex->paths == 1,
              [] { return std::string("apex misplaced"); });
    if (depth >= 1) {
        const GraphVertex* l = g.find(2, 0);
        const GraphVertex* rr = g.find(2, 1);
        ck.expect(l && std::abs(l->x + 1) <= 1e-9 && std::abs(l->y + 1) <= 1e-9,
                  [] { return std::string("vertex (2,0) not at (-1,-1)"); });
        ck.expect(rr && std::abs(rr->x - 1) <= 1e-9 && std::abs(rr->y + 1) <= 1e-9,
                  [] { return std::string("vertex (2,1) not at (1,-1)"); });
    }
    if (depth >= 3) {
        const GraphVertex* v43 = g.find(4, 3);
        ck.expect(v43 && v43->paths == 2, [] { return std::string("paths(4,3) != 2"); });
    }
    ck.expect(g.find(1, 5) == nullptr, [] { return std::string("find invented a vertex"); });
}

void suite_mediant(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::clamp<uint64_t>(bnd(opt, 20), 6, 28));
    note = cat("mediant structure of the q-grid through level n = ", bound);
    ws.r.ensure(fib_u64(bound + 3));
    auto& r = ws.r;
    // n = 2 is degenerate: T(0) = 1 = F(2), outside the level-3 column range.
    for (unsigned n = 3; n + 1 <= bound; ++n) {
        for (uint64_t k = 0; k < fib_u64(n - 1); ++k) {
            const uint64_t tk = t_u64(k);
            const auto lhs = q_raw(tk, n + 1, r);
            const auto rhs = q_raw(k, n, r);
            ck.expect(lhs == rhs,
                      [&] { return cat("T-shift changed the raw pair at n = ", n, ", k = ", k); });
        }
        for (uint64_t k = 0; k < fib_u64(n - 1); ++k) {
            ck.expect(t_u64(fib_u64(n) + k) == fib_u64(n + 1) + t_u64(k),
                      [&] { return cat("T(F(n)+k) != F(n+1)+T(k) at n = ", n, ", k = ", k); });
        }
    }
    for (unsigned n = 2; n + 2 <= bound; ++n) {
        for (uint64_t k = 1; k < fib_u64(n - 1); ++k) {
            const auto up = q_raw(rho2_u64(k), n + 2, r);
            const auto left = q_raw(k - 1, n, r);
            const auto right = q_raw(k, n, r);
            ck.expect(up.first == left.first + right.first && up.second == left.second + right.second,
                      [&] { return cat("mediant failed at n = ", n, ", k = ", k); });
        }
    }
    for (unsigned n = 4; n <= bound; ++n) {
        const uint64_t edge = fib_u64(n - 1) - 1;
        // floor(F(n-1)*phi) is F(n)-1 for odd n and F(n) for even n, so the
        // rho2 image of the last column alternates with the parity of n.
        const uint64_t expected = fib_u64(n + 1) - (n % 2 == 0 ? 2 : 3);
        ck.expect(rho2_u64(edge) == expected,
                  [&] { return cat("rho2 edge image wrong at n = ", n); });
        ck.expect(t_u64(edge) == fib_u64(n) - 1,
                  [&] { return cat("T edge image wrong at n = ", n); });
    }
}

void suite_lemma_4_6(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::clamp<uint64_t>(bnd(opt, 20), 4, 28));
    note = cat("R(F(n+2)+j) = R(F(n)+j) + R(j) for n <= ", bound);
    ws.r.ensure(fib_u64(bound + 2) + fib_u64(bound - 1));
    const auto& r = ws.r;
    for (unsigned n = 2; n <= bound; ++n) {
        for (uint64_t j = 0; j < fib_u64(n - 1); ++j) {
            ck.expect(r.at(fib_u64(n + 2) + j) == r.at(fib_u64(n) + j) + r.at(j),
                      [&] { return cat("failed at n = ", n, ", j = ", j); });
        }
    }
}

void suite_row_symmetry(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::clamp<uint64_t>(bnd(opt, 20), 4, 26));
    note = cat("R(F(m)+k) = R(F(m+1)-2-k) for m <= ", bound,
               " (the unshifted mirror appears in the acceptance report)");
    ws.r.ensure(fib_u64(bound + 1));
    const auto& r = ws.r;
    for (unsigned m = 4; m <= bound; ++m) {
        const uint64_t top = fib_u64(m - 1);
        for (uint64_t k = 0; k + 2 <= top; ++k) {
            ck.expect(r.at(fib_u64(m) + k) == r.at(fib_u64(m + 1) - 2 - k),
                      [&] { return cat("mirror failed at m = ", m, ", k = ", k); });
        }
    }
    const auto arr = crushed_array_r(std::min(bound, 20u), ws.r).rows;
    for (size_t idx = 0; idx < arr.size(); ++idx) {
        const auto& row = arr[idx];
        for (size_t t = 1; t < row.size(); ++t) {
            ck.expect(row[t] == row[row.size() - t],
                      [&] { return cat("row ", idx + 1, " tail not palindromic at offset ", t); });
        }
    }
}

void suite_crushed_r(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned rows = unsigned(std::clamp<uint64_t>(bnd(opt, 22), 6, 24));
    note = cat("crushed R rows 1..", rows, ": frozen prefix, column differences, dying-rabbit");
    ws.r.ensure(fib_u64(rows + 3));
    const auto arr = crushed_array_r(rows, ws.r).rows;
    ck.expect(arr.size() == rows, [&] { return cat("row count ", arr.size(), " != ", rows); });
    const std::vector<std::vector<long long>> frozen{
        {1},
        {1, 2},
        {1, 2, 2},
        {1, 3, 2, 2, 3},
        {1, 3, 3, 2, 4, 2, 3, 3},
        {1, 4, 3, 3, 5, 2, 4, 4, 2, 5, 3, 3, 4}};
    for (size_t i = 0; i < frozen.size() && i < arr.size(); ++i) {
        check_list(ck, cat("crushed row ", i + 1), arr[i], frozen[i]);
    }
    for (size_t idx = 0; idx < arr.size(); ++idx) {
        const unsigned rr = unsigned(idx) + 1;
        ck.expect(arr[idx].size() == fib_u64(rr + 1),
                  [&] { return cat("row ", rr, " length != F(", rr + 1, ")"); });
        ck.expect(!arr[idx].empty() && arr[idx][0] == 1,
                  [&] { return cat("row ", rr, " leading entry != 1"); });
        ck.expect(arr[idx][0] == ws.r.at(fib_u64(rr + 2) - 1),
                  [&] { return cat("row ", rr, " start index off"); });
    }
    for (size_t idx = 0; idx + 2 < arr.size(); ++idx) {
        for (size_t col = 1; col < arr[idx].size(); ++col) {
            ck.expect(arr[idx + 2][col] - arr[idx][col] == ws.r.at(col - 1),
                      [&] { return cat("column ", col, " difference != R(", col - 1,
                                       ") between rows ", idx + 1, " and ", idx + 3); });
        }
    }
    for (size_t idx = 3; idx < arr.size(); ++idx) {
        for (size_t col = 0; col < arr[idx - 3].size(); ++col) {
            ck.expect(arr[idx][col] == arr[idx - 1][col] + arr[idx - 2][col] - arr[idx - 3][col],
                      [&] { return cat("dying-rabbit failed at row ", idx + 1, ", column ", col); });
        }
    }
}

void suite_q_series(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned mtop = unsigned(std::clamp<uint64_t>(bnd(opt, 30), 12, 30));
    note = cat("q-grid values, inverse series, and probe evaluation at level ", mtop);
    ws.r.ensure(fib_u64(mtop + 1));
    auto& r = ws.r;
    ck.expect(q_value(1, 6, r) == Rational(1, 2), [] { return std::string("q(1,6) != 1/2"); });
    ck.expect(q_value(3, 6, r) == Rational(2, 3), [] { return std::string("q(3,6) != 2/3"); });
    for (unsigned n = 3; n <= 10; ++n) {
        ck.expect(q_value(0, n, r) == Rational(BigInt(1), r.at(fib_u64(n))),
                  [&] { return cat("q(0,", n, ") != 1/R(F(", n, "))"); });
    }
    for (long long c = 1; c <= 6; ++c) {
        const double want = std::pow(kPhi, double(1 - 2 * c));
        const double got = q_inverse_series(CFWord{{BigInt(c)}});
        ck.expect(std::abs(got - want) <= 1e-9,
                  [&] { return cat("series([", c, "]) = ", got, " != phi^", 1 - 2 * c); });
    }
    ck.expect(std::abs(q_inverse_series(CFWord{{BigInt(1)}}, 40) - kInvSqrt5) <= 1e-9,
              [] { return std::string("all-ones series != 1/sqrt(5)"); });
    const double s11 = q_inverse_series(CFWord{{BigInt(1), BigInt(1)}});
    ck.expect(std::abs(s11 - (1.0 / (kPhi * kPhi))) <= 1e-9,
              [] { return std::string("series([1,1]) != phi^-2"); });
    ck.expect(std::abs(s11 - q_inverse_series(CFWord{{BigInt(2)}})) > 0.1,
              [] { return std::string("series should distinguish the two forms of 1/2"); });
    for (long long c = 1; c <= 5; ++c) {
        const CFWord cf{{BigInt(c)}};
        const double y = q_inverse_series(cf);
        double low = 2.0, high = -1.0;
        for (unsigned m = std::min(24u, mtop); m <= mtop; ++m) {
            uint64_t k = uint64_t(std::llround(y * fib(m).convert_to<double>()));
            const uint64_t edge = fib_u64(m - 1) - 1;
            if (k > edge) k = edge;
            if (c >= 2) {
                ck.expect(k == fib_u64(m - 2 * unsigned(c) + 1),
                          [&] { return cat("probe index at c = ", c, ", m = ", m,
                                           " not the expected Fibonacci"); });
            }
            const Rational v = q_value(k, m, r);
            const double vd = v.convert_to<double>();
            low = std::min(low, vd);
            high = std::max(high, vd);
            if (m == mtop) {
                ck.expect(v == Rational(1, c),
                          [&] { return cat("q at probe c = ", c, " not exactly 1/", c); });
                ck.expect(std::abs(vd - 1.0 / double(c)) <= 1e-3,
                          [&] { return cat("probe c = ", c, " misses by more than 1e-3"); });
            }
        }
        ck.expect(high - low <= 1e-4,
                  [&] { return cat("probe c = ", c, " bracket width ", high - low, " > 1e-4"); });
    }
    for (unsigned m = 4; m <= 12; ++m) {
        for (unsigned t = 1; t <= 3; ++t) {
            for (uint64_t k = 0; k < fib_u64(m - 1); ++k) {
                const Rational s = q_value(k, m, r) + t;
                const Rational lhs(den(s), num(s));
                const Rational rhs = q_value(fib_u64(m + 1) - 2 - k, m + 2 * t, r);
                ck.expect(lhs == rhs,
                          [&] { return cat("reciprocal step failed at m = ", m, ", t = ", t,
                                           ", k = ", k); });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// sigma-binet
// ---------------------------------------------------------------------------

void suite_sf_recursion(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 10000);
    note = cat("s_F recursion under the two shifts, n <= ", bound);
    ws.sf.ensure(rho2_u64(bound) + 2);
    const auto& sf = ws.sf;
    sweep(0, bound, opt, ck, [&sf](Checker& c, uint64_t n) {
        c.expect(sf.at(n) == zeck_encode(BigInt(n)).popcount(),
                 [&] { return cat("s_F != Zeckendorf weight at n = ", n); });
        c.expect(sf.at(rho_u64(n)) == sf.at(n),
                 [&] { return cat("s_F(rho(n)) != s_F(n) at n = ", n); });
        c.expect(sf.at(rho2_u64(n) + 1) == sf.at(n) + 1,
                 [&] { return cat("s_F(rho2(n)+1) != s_F(n)+1 at n = ", n); });
        if (n <= 2048) {
            c.expect(s_f(n) == sf.at(n), [&] { return cat("direct s_F disagrees at n = ", n); });
        }
    });
    std::vector<uint32_t> prefix;
    for (uint64_t n = 0; n <= 20; ++n) prefix.push_back(sf.at(n));
    check_list(ck, "s_F prefix", prefix, {0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 3, 1, 2, 2, 2, 3, 2, 3, 3});
}

void suite_sf_crushed(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned rows = unsigned(std::clamp<uint64_t>(bnd(opt, 20), 7, 26));
    note = cat("crushed s_F rows 1..", rows, ": constant columns, limiting row s_F + 1");
    const auto arr = crushed_array_sf(rows, ws.sf);
    ck.expect(arr.size() == rows, [&] { return cat("row count ", arr.size(), " != ", rows); });
    const std::vector<std::vector<long long>> frozen{
        {1},
        {1},
        {1, 2},
        {1, 2, 2},
        {1, 2, 2, 2, 3},
        {1, 2, 2, 2, 3, 2, 3, 3},
        {1, 2, 2, 2, 3, 2, 3, 3, 2, 3, 3, 3, 4}};
    for (size_t i = 0; i < frozen.size() && i < arr.size(); ++i) {
        check_list(ck, cat("crushed row ", i + 1), arr[i], frozen[i]);
    }
    for (size_t idx = 0; idx < arr.size(); ++idx) {
        ck.expect(arr[idx].size() == fib_u64(idx + 1),
                  [&] { return cat("row ", idx + 1, " length != F(", idx + 1, ")"); });
        for (size_t p = 0; p < arr[idx].size(); ++p) {
            ck.expect(arr[idx][p] == arr.back()[p],
                      [&] { return cat("column ", p, " not constant at row ", idx + 1); });
        }
    }
    for (size_t p = 0; p < arr.back().size(); ++p) {
        ck.expect(arr.back()[p] == s_f(p) + 1,
                  [&] { return cat("limiting row entry ", p, " != s_F(", p, ") + 1"); });
    }
}

void suite_c_integrality(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 5000);
    note = cat("sigma-Binet sums collapse to integers for n <= ", bound);
    ws.c.ensure(bound, ws.sf, opt.jobs ? opt.jobs : 1);
    const auto& c = ws.c;
    ck.expect(c.at(0) == 0, [] { return std::string("c(0) != 0"); });
    for (uint64_t n = 1; n <= bound; ++n) {
        ck.expect(c.at(n) >= 0, [&] { return cat("c(", n, ") negative"); });
    }
    const auto& sf = ws.sf;
    sweep(1, std::min<uint64_t>(bound, 200), opt, ck, [&c, &sf](Checker& cc, uint64_t n) {
        const std::complex<double> sigma = std::polar(1.0, M_PI / 3.0);
        std::complex<double> sum = 0;
        for (uint64_t k = 0; k < n; ++k) {
            sum += std::pow(sigma, double(s_f(k))) * std::pow(std::conj(sigma), double(s_f(n - 1 - k)));
        }
        (void)sf;
        cc.expect(std::abs(sum.real() - c.at(n).convert_to<double>()) <= 1e-6 &&
                      std::abs(sum.imag()) <= 1e-6,
                  [&] { return cat("floating sum disagrees at n = ", n, ": (", sum.real(), ", ",
                                   sum.imag(), ")"); });
    });
    for (uint64_t n = 1; n <= std::min<uint64_t>(bound, 256); ++n) {
        ck.expect(c_sigma(n, ws.sf) == c.at(n),
                  [&] { return cat("single-shot c disagrees at n = ", n); });
    }
}

void suite_thm_5_1(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::clamp<uint64_t>(bnd(opt, 18), 5, 21));
    note = cat("c(F(n+2)+k) = c(F(n)+k) + c(k) + c(F(n-1)+k) for 2 <= n <= ", bound);
    const uint64_t need = fib_u64(bound + 2) + fib_u64(bound - 2) + 2;
    ws.c.ensure(need, ws.sf, opt.jobs ? opt.jobs : 1);
    const auto& c = ws.c;
    for (unsigned n = 2; n <= bound; ++n) {
        for (uint64_t k = 0; k <= fib_u64(n - 2); ++k) {
            ck.expect(c.at(fib_u64(n + 2) + k) ==
                          c.at(fib_u64(n) + k) + c.at(k) + c.at(fib_u64(n - 1) + k),
                      [&] { return cat("failed at n = ", n, ", k = ", k); });
        }
    }
}

void suite_cor_5_2(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned bound = unsigned(std::clamp<uint64_t>(bnd(opt, 18), 6, 21));
    note = cat("corner identities: c(F(n)) + c(F(n-1)+2) = c(F(n)+1) for 5 <= n <= ", bound,
               ", c(F(n)+1) = c(F(n+1)+2) for 3 <= n <= ", bound,
               " (the first identity is genuinely false at n = 4: 2 + 3 != 3)");
    ws.c.ensure(fib_u64(bound + 1) + 3, ws.sf, opt.jobs ? opt.jobs : 1);
    const auto& c = ws.c;
    for (unsigned n = 5; n <= bound; ++n) {
        ck.expect(c.at(fib_u64(n)) + c.at(fib_u64(n - 1) + 2) == c.at(fib_u64(n) + 1),
                  [&] { return cat("corner sum failed at n = ", n); });
    }
    for (unsigned n = 3; n <= bound; ++n) {
        ck.expect(c.at(fib_u64(n) + 1) == c.at(fib_u64(n + 1) + 2),
                  [&] { return cat("corner equality failed at n = ", n); });
    }
    ck.expect(c.at(fib_u64(4)) + c.at(fib_u64(3) + 2) != c.at(fib_u64(4) + 1),
              [] { return std::string("the documented n = 4 exception unexpectedly holds"); });
}

void suite_c_prefix(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const unsigned rows = unsigned(std::clamp<uint64_t>(bnd(opt, 16), 8, 18));
    note = cat("frozen c prefix, crushed rows, Padovan first column, dying-rabbit to row ", rows);
    const unsigned jobs = opt.jobs ? opt.jobs : 1;
    ws.c.ensure(fib_u64(rows + 2) + 1, ws.sf, jobs);
    const auto& c = ws.c;
    std::vector<BigInt> prefix;
    for (uint64_t n = 1; n <= 23; ++n) prefix.push_back(c.at(n));
    check_list(ck, "c prefix", prefix,
               {1, 1, 2, 3, 2, 4, 3, 3, 6, 4, 6, 6, 4, 8, 6, 7, 10, 6, 9, 7, 5, 11, 8});
    const auto arr = crushed_array_c(rows, ws.sf, ws.c, jobs);
    const std::vector<std::vector<long long>> frozen{
        {1},
        {1},
        {2, 3},
        {2, 4, 3},
        {3, 6, 4, 6, 6},
        {4, 8, 6, 7, 10, 6, 9, 7},
        {5, 11, 8, 11, 13, 8, 14, 10, 9, 15, 9, 13, 11},
        {7, 15, 11, 15, 19, 12, 19, 14, 11, 21, 14, 19, 19}};
    for (size_t i = 0; i < frozen.size() && i < arr.size(); ++i) {
        const auto& row = arr[i];
        ck.expect(row.size() >= frozen[i].size(),
                  [&] { return cat("crushed c row ", i + 1, " too short"); });
        for (size_t t = 0; t < frozen[i].size() && t < row.size(); ++t) {
            ck.expect(row[t] == frozen[i][t],
                      [&] { return cat("crushed c row ", i + 1, " entry ", t, " = ", row[t],
                                       " != ", frozen[i][t]); });
        }
    }
    for (size_t idx = 0; idx < arr.size(); ++idx) {
        ck.expect(arr[idx].size() == fib_u64(idx + 1),
                  [&] { return cat("crushed c row ", idx + 1, " length != F(", idx + 1, ")"); });
        ck.expect(arr[idx][0] == c.at(fib_u64(idx + 2)),
                  [&] { return cat("crushed c row ", idx + 1, " start index off"); });
    }
    for (unsigned n = 2; n + 2 <= rows + 1; ++n) {
        ck.expect(c.at(fib_u64(n + 2)) == c.at(fib_u64(n)) + c.at(fib_u64(n - 1)),
                  [&] { return cat("Padovan column failed at n = ", n); });
    }
    for (size_t idx = 4; idx < arr.size(); ++idx) {
        for (size_t col = 0; col < arr[idx - 4].size(); ++col) {
            ck.expect(arr[idx][col] == arr[idx - 1][col] + arr[idx - 2][col] - arr[idx - 4][col],
                      [&] { return cat("dying-rabbit failed at crushed c row ", idx + 1,
                                       ", column ", col); });
        }
    }
}

void suite_conjectures(Checker& ck, Workspace& ws, const VerifyOptions& opt, std::string& note) {
    const uint64_t bound = bnd(opt, 2000);
    note = cat("conjecture sweeps report zero violations up to n = ", bound);
    const ConjectureReport rep =
        run_conjectures(bound, ws.sf, ws.c, opt.jobs ? opt.jobs : 1);
    ck.expect(rep.entries.size() == 4,
              [&] { return cat("expected 4 sweeps, got ", rep.entries.size()); });
    const std::vector<std::string> ids{"i", "ii", "iii", "iv"};
    for (size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& e = rep.entries[i];
        if (i < ids.size()) {
            ck.expect(e.id == ids[i], [&] { return cat("sweep ", i, " id ", e.id, " != ", ids[i]); });
        }
        ck.expect(e.cases > 0, [&] { return cat("sweep ", e.id, " ran no cases"); });
        ck.expect(e.violations.empty(),
                  [&] { return cat("sweep ", e.id, " (", e.description, ") reports ",
                                   e.violations.size(), " violations, first: ",
                                   e.violations.front()); });
    }
    ck.expect(rep.total_violations() == 0,
              [&] { return cat("total violations ", rep.total_violations(), " != 0"); });
}

// ---------------------------------------------------------------------------
// cross-module frozen listings
// ---------------------------------------------------------------------------

void suite_printed_prefixes(Checker& ck, Workspace& ws, const VerifyOptions&, std::string& note) {
    note = "frozen opening terms and tabular rows for every printed sequence";
    ws.stern.ensure(34);
    ws.b.ensure(29);
    ws.r.ensure(fib_u64(9));
    ws.sf.ensure(34);
    ws.c.ensure(fib_u64(10), ws.sf);

    std::vector<BigInt> stern_prefix;
    for (uint64_t n = 1; n <= 17; ++n) stern_prefix.push_back(ws.stern.at(n));
    check_list(ck, "a prefix", stern_prefix, {1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5});

    const std::vector<std::vector<long long>> rows_a{
        {1, 1},
        {1, 2, 1},
        {1, 3, 2, 3, 1},
        {1, 4, 3, 5, 2, 5, 3, 4, 1},
        {1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7, 4, 5, 1}};
    for (unsigned j = 0; j < rows_a.size(); ++j) {
        check_list(ck, cat("diatomic row ", j), diatomic_row(j), rows_a[j]);
    }

    std::vector<BigInt> b_prefix;
    for (uint64_t n = 1; n <= 27; ++n) b_prefix.push_back(ws.b.at(n));
    check_list(ck, "b prefix", b_prefix,
               {0, 0, 1, 0, 2, 1, 2, 0, 3, 2, 6, 1, 6, 2, 3, 0, 4, 3, 10, 2, 15, 6, 12, 1, 12, 6, 15});

    const std::vector<std::vector<long long>> rows_b{
        {0}, {0, 1}, {0, 2, 1, 2}, {0, 3, 2, 6, 1, 6, 2, 3}, {0, 4, 3, 10, 2, 15, 6, 12}};
    for (unsigned j = 0; j < rows_b.size(); ++j) {
        const uint64_t lo = uint64_t(1) << j;
        std::vector<BigInt> row;
        for (size_t t = 0; t < rows_b[j].size(); ++t) row.push_back(ws.b.at(lo + t));
        check_list(ck, cat("b row ", j), row, rows_b[j]);
    }
    std::vector<BigInt> bdiff;
    for (uint64_t k = 0; k < 8; ++k) bdiff.push_back(ws.b.at(16 + k) - ws.b.at(8 + k));
    check_list(ck, "b row difference", bdiff, {0, 1, 1, 4, 1, 9, 4, 9});
    for (uint64_t k = 0; k < 8; ++k) {
        ck.expect(bdiff[k] == ws.stern.at(k) * ws.stern.at(k),
                  [&] { return cat("b row difference != a(k)^2 at k = ", k); });
    }

    std::vector<BigInt> r_prefix;
    for (uint64_t n = 0; n <= 20; ++n) r_prefix.push_back(ws.r.at(n));
    check_list(ck, "R prefix", r_prefix, {1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3, 3, 2, 4, 2, 3, 3, 1});

    std::vector<uint32_t> sf_prefix;
    for (uint64_t n = 0; n <= 20; ++n) sf_prefix.push_back(ws.sf.at(n));
    check_list(ck, "s_F prefix", sf_prefix, {0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 3, 1, 2, 2, 2, 3, 2, 3, 3});

    std::vector<BigInt> c_prefix;
    for (uint64_t n = 1; n <= 23; ++n) c_prefix.push_back(ws.c.at(n));
    check_list(ck, "c prefix", c_prefix,
               {1, 1, 2, 3, 2, 4, 3, 3, 6, 4, 6, 6, 4, 8, 6, 7, 10, 6, 9, 7, 5, 11, 8});

    std::vector<BigInt> rho2_list, t_list;
    for (uint64_t n = 0; n <= 9; ++n) {
        rho2_list.push_back(rho2(BigInt(n)));
        t_list.push_back(t_shift(BigInt(n)));
    }
    check_list(ck, "rho2 prefix", rho2_list, {0, 3, 5, 8, 11, 13, 16, 18, 21, 24});
    check_list(ck, "T prefix", t_list, {1, 2, 4, 6, 7, 9, 10, 12, 14, 15});

    const auto arr_r = crushed_array_r(6, ws.r).rows;
    const std::vector<std::vector<long long>> frozen_r{
        {1}, {1, 2}, {1, 2, 2}, {1, 3, 2, 2, 3}, {1, 3, 3, 2, 4, 2, 3, 3},
        {1, 4, 3, 3, 5, 2, 4, 4, 2, 5, 3, 3, 4}};
    for (size_t i = 0; i < frozen_r.size(); ++i) {
        check_list(ck, cat("crushed R row ", i + 1), arr_r[i], frozen_r[i]);
    }

    const auto arr_sf = crushed_array_sf(7, ws.sf);
    const std::vector<std::vector<long long>> frozen_sf{
        {1}, {1}, {1, 2}, {1, 2, 2}, {1, 2, 2, 2, 3}, {1, 2, 2, 2, 3, 2, 3, 3},
        {1, 2, 2, 2, 3, 2, 3, 3, 2, 3, 3, 3, 4}};
    for (size_t i = 0; i < frozen_sf.size(); ++i) {
        check_list(ck, cat("crushed s_F row ", i + 1), arr_sf[i], frozen_sf[i]);
    }

    const auto arr_c = crushed_array_c(8, ws.sf, ws.c);
    const std::vector<std::vector<long long>> frozen_c{
        {1}, {1}, {2, 3}, {2, 4, 3}, {3, 6, 4, 6, 6}, {4, 8, 6, 7, 10, 6, 9, 7},
        {5, 11, 8, 11, 13, 8, 14, 10, 9, 15, 9, 13, 11},
        {7, 15, 11, 15, 19, 12, 19, 14, 11, 21, 14, 19, 19}};
    for (size_t i = 0; i < frozen_c.size(); ++i) {
        const auto& row = arr_c[i];
        ck.expect(row.size() >= frozen_c[i].size(),
                  [&] { return cat("crushed c row ", i + 1, " too short"); });
        for (size_t t = 0; t < frozen_c[i].size() && t < row.size(); ++t) {
            ck.expect(row[t] == frozen_c[i][t],
                      [&] { return cat("crushed c row ", i + 1, " entry ", t, " wrong"); });
        }
    }
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

using SuiteFn = void (*)(Checker&, Workspace&, const VerifyOptions&, std::string&);

struct SuiteDef {
    const char* name;
    SuiteFn fn;
};

const SuiteDef kSuites[] = {
    {"isqrt", suite_isqrt},
    {"cf-roundtrip", suite_cf_roundtrip},
    {"zeck-roundtrip", suite_zeck_roundtrip},
    {"dyadic", suite_dyadic},
    {"eisenstein-ring", suite_eisenstein},
    {"stern-recurrence", suite_stern_recurrence},
    {"stern-bijection", suite_stern_bijection},
    {"stern-paths", suite_stern_paths},
    {"lemma-3-5", suite_lemma_3_5},
    {"jacobsthal", suite_jacobsthal},
    {"modified-fib", suite_modified_fib},
    {"sigma-binet-stern", suite_sigma_binet_stern},
    {"pascal-mod2", suite_pascal_mod2},
    {"coons-tyler", suite_coons_tyler},
    {"mertens", suite_mertens},
    {"box-inverse", suite_box_inverse},
    {"box-monotone", suite_box_monotone},
    {"box-symmetry", suite_box_symmetry},
    {"f-powers", suite_f_powers},
    {"oplus-algebra", suite_oplus_algebra},
    {"thm-3-6", suite_thm_3_6},
    {"prop-3-2", suite_prop_3_2},
    {"remark-3-3", suite_remark_3_3},
    {"thm-3-9", suite_thm_3_9},
    {"cor-3-10", suite_cor_3_10},
    {"thm-3-11", suite_thm_3_11},
    {"lemma-3-13", suite_lemma_3_13},
    {"thm-3-14", suite_thm_3_14},
    {"thm-3-16", suite_thm_3_16},
    {"remark-3-19", suite_remark_3_19},
    {"r-oracle", suite_r_oracle},
    {"thm-4-2", suite_thm_4_2},
    {"thm-4-3", suite_thm_4_3},
    {"beatty-partition", suite_beatty_partition},
    {"alpha-beta", suite_alpha_beta},
    {"triple-rho", suite_triple_rho},
    {"lemma-4-4", suite_lemma_4_4},
    {"mediant", suite_mediant},
    {"lemma-4-6", suite_lemma_4_6},
    {"row-symmetry", suite_row_symmetry},
    {"crushed-r", suite_crushed_r},
    {"q-series", suite_q_series},
    {"sf-recursion", suite_sf_recursion},
    {"sf-crushed", suite_sf_crushed},
    {"c-integrality", suite_c_integrality},
    {"thm-5-1", suite_thm_5_1},
    {"cor-5-2", suite_cor_5_2},
    {"c-prefix", suite_c_prefix},
    {"conjectures", suite_conjectures},
    {"printed-prefixes", suite_printed_prefixes},
};

}  // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& def : kSuites) names.emplace_back(def.name);
    return names;
}

SuiteResult verify_run(const std::string& name, Workspace& ws, const VerifyOptions& opt) {
    const SuiteDef* def = nullptr;
    for (const auto& d : kSuites) {
        if (name == d.name) {
            def = &d;
            break;
        }
    }
    if (!def) throw std::invalid_argument("unknown verification suite: " + name);
    SuiteResult res;
    res.name = name;
    Checker ck;
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        def->fn(ck, ws, opt, note);
    } catch (const std::exception& e) {
        ck.expect(false, [&] { return cat("suite aborted: ", e.what()); });
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.summary = note;
    res.cases = ck.cases();
    res.failures = ck.failures();
    res.examples = ck.examples();
    return res;
}

std::vector<SuiteResult> verify_run_all(Workspace& ws, const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const auto& def : kSuites) out.push_back(verify_run(def.name, ws, opt));
    return out;
}

}  // namespace diatomic
