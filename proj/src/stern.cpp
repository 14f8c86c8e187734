#include "diatomic/stern.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diatomic {

namespace {

constexpr double kLog2Phi = 0.6942419136306174;  // log2((1 + sqrt 5)/2)

unsigned top_bit(const BigInt& n) {
    return boost::multiprecision::msb(n);  // index of the highest set bit
}

}  // namespace

BigInt stern(const BigInt& n) {
    if (n < 0) throw std::domain_error("stern: negative index");
    if (n == 0) return 0;
    // fusc descent, least-significant bit first
    BigInt a = 1, b = 0;
    unsigned top = top_bit(n);
    for (unsigned i = 0; i <= top; ++i) {
        if (boost::multiprecision::bit_test(n, i)) {
            b += a;
        } else {
            a += b;
        }
    }
    return b;
}

std::vector<BigInt> diatomic_row(unsigned j) {
    if (j > 24) throw std::range_error("diatomic_row: row too large");
    // build a_0 .. a_{2^{j+1}} by the defining recurrence
    size_t n = size_t{1} << (j + 1);
    std::vector<BigInt> a(n + 1);
    a[0] = 0;
    if (n >= 1) a[1] = 1;
    for (size_t i = 2; i <= n; ++i) {
        a[i] = (i % 2 == 0) ? a[i / 2] : a[i / 2] + a[i / 2 + 1];
    }
    return std::vector<BigInt>(a.begin() + (size_t{1} << j), a.end());
}

SternPair stern_pair(const BigInt& n) {
    if (n < 1) throw std::domain_error("stern_pair: index must be >= 1");
    BigInt x = 1, y = 1;  // (a_1, a_2)
    if (n == 1) return {x, y};
    unsigned top = top_bit(n);
    for (int i = static_cast<int>(top) - 1; i >= 0; --i) {
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) {
            x += y;  // (a_m, a_{m+1}) -> (a_{2m+1}, a_{2m+2})
        } else {
            y += x;  // (a_m, a_{m+1}) -> (a_{2m}, a_{2m+1})
        }
    }
    return {x, y};
}

PairPath stern_path(BigInt p, BigInt q) {
    if (p < 1 || q < 1) throw std::domain_error("stern_path: entries must be >= 1");
    if (big_gcd(p, q) != 1) throw std::domain_error("stern_path: pair not coprime");
    PairPath path;
    while (!(p == 1 && q == 1)) {
        if (p < q) {
            q -= p;
            path.bits.push_back(0);
        } else {
            p -= q;
            path.bits.push_back(1);
        }
    }
    return path;
}

BigInt stern_index(const BigInt& p, const BigInt& q) {
    return stern_path(p, q).replay_index();
}

Eisenstein binet_sigma_stern(uint64_t n) {
    // products sigma^i * conj(sigma)^j only depend on (i mod 6, j mod 6)
    static const auto prod = [] {
        std::array<std::array<Eisenstein, 6>, 6> t{};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) t[i][j] = sigma_pow(i) * sigma_bar_pow(j);
        return t;
    }();
    long long counts[6][6] = {};
    for (uint64_t k = 0; k <= n; ++k) {
        ++counts[s2(k) % 6][s2(n - k) % 6];
    }
    Eisenstein sum;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (counts[i][j]) {
                Eisenstein t = prod[i][j];
                sum += Eisenstein{t.re * counts[i][j], t.si * counts[i][j]};
            }
        }
    }
    return sum;
}

BigInt pascal_mod2_diagonal(uint64_t n) {
    // C(n - i, i) = C(i + (n - 2i), i) is odd iff i & (n - 2i) == 0 (Lucas)
    BigInt count = 0;
    for (uint64_t i = 0; 2 * i <= n; ++i) {
        if ((i & (n - 2 * i)) == 0) ++count;
    }
    return count;
}

BigInt jacobsthal(unsigned n) {
    if (n < 1) throw std::domain_error("jacobsthal: index must be >= 1");
    BigInt p = BigInt(1) << n;
    if (n % 2 == 0) p -= 1;
    else p += 1;
    return p / 3;
}

double coons_tyler_ratio(uint64_t n) {
    if (n < 1) throw std::domain_error("coons_tyler_ratio: index must be >= 1");
    double a = stern(BigInt(n)).convert_to<double>();
    return a / std::pow(3.0 * static_cast<double>(n), kLog2Phi);
}

std::pair<double, uint64_t> coons_tyler_max(uint64_t lo, uint64_t hi) {
    if (lo < 1 || lo > hi) throw std::domain_error("coons_tyler_max: bad range");
    if (hi > (uint64_t{1} << 22)) throw std::range_error("coons_tyler_max: range too large");
    // table of a_n as doubles (values stay far below 2^53 in this range)
    std::vector<double> a(hi + 2);
    a[0] = 0;
    a[1] = 1;
    for (size_t i = 2; i < a.size(); ++i) {
        a[i] = (i % 2 == 0) ? a[i / 2] : a[i / 2] + a[i / 2 + 1];
    }
    double best = -1;
    uint64_t arg = lo;
    for (uint64_t n = lo; n <= hi; ++n) {
        double r = a[n] / std::pow(3.0 * static_cast<double>(n), kLog2Phi);
        if (r > best) {
            best = r;
            arg = n;
        }
    }
    return {best, arg};
}

std::vector<int8_t> mobius_sieve(uint64_t n) {
    std::vector<int8_t> mu(n + 1, 0);
    if (n >= 1) mu[1] = 1;
    std::vector<uint32_t> primes;
    std::vector<bool> composite(n + 1, false);
    for (uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<uint32_t>(i));
            mu[i] = -1;
        }
        for (uint32_t p : primes) {
            uint64_t ip = i * p;
            if (ip > n) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<int8_t>(-mu[i]);
        }
    }
    return mu;
}

ExpSum stern_exponential_sum(uint64_t x) {
    if (x < 2) throw std::domain_error("stern_exponential_sum: x must be >= 2");
    if (x > 20000) throw std::range_error("stern_exponential_sum: x too large");
    ExpSum out{{0.0, 0.0}, 0, 0};

    // Complex side: every reduced p/q in (0,1) appears exactly once as a
    // mediant in the Stern-Brocot subtree between 0/1 and 1/1.
    struct Node {
        uint64_t p1, q1, p2, q2;
    };
    std::vector<Node> stack{{0, 1, 1, 1}};
    const double tau = 2.0 * std::numbers::pi;
    while (!stack.empty()) {
        Node t = stack.back();
        stack.pop_back();
        uint64_t pm = t.p1 + t.p2, qm = t.q1 + t.q2;
        if (qm >= x) continue;
        double ang = tau * static_cast<double>(pm) / static_cast<double>(qm);
        out.value += std::complex<double>(std::cos(ang), std::sin(ang));
        ++out.terms;
        stack.push_back({t.p1, t.q1, pm, qm});
        stack.push_back({pm, qm, t.p2, t.q2});
    }

    // Integer side: sum of mu(q) for 2 <= q < x.
    auto mu = mobius_sieve(x - 1);
    long long m = 0;
    for (uint64_t q = 2; q < x; ++q) m += mu[q];
    out.mertens = m;
    return out;
}

void SternTable::ensure(size_t n) {
    std::lock_guard<std::mutex> lock(grow_);
    if (values_.size() > n) return;
    size_t old = values_.size();
    values_.resize(n + 1);
    if (old == 0) {
        values_[0] = 0;
        if (n >= 1) values_[1] = 1;
        old = 2;
    }
    for (size_t i = old; i <= n; ++i) {
        values_[i] = (i % 2 == 0) ? values_[i / 2] : values_[i / 2] + values_[i / 2 + 1];
    }
}

void SternTable::adopt(std::vector<BigInt> v) {
    std::lock_guard<std::mutex> lock(grow_);
    if (v.size() > values_.size()) values_ = std::move(v);
}

}  // namespace diatomic
