#include "diatomic/oplus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diatomic {

namespace {

BigInt exact_root(const BigInt& radicand, const char* who) {
    if (radicand < 0) throw std::domain_error(std::string(who) + ": negative radicand");
    auto r = isqrt_exact(radicand);
    if (!r.perfect) throw std::domain_error(std::string(who) + ": radicand not a perfect square");
    return r.root;
}

}  // namespace

BigInt oplus(const BigInt& a, const BigInt& b) {
    if (a < 0 || b < 0) throw std::domain_error("oplus: negative operand");
    return a + b + exact_root(4 * a * b + 1, "oplus");
}

BigInt ominus(const BigInt& a, const BigInt& b) {
    if (a < 0 || b < 0) throw std::domain_error("ominus: negative operand");
    return a + b - exact_root(4 * a * b + 1, "ominus");
}

BigInt oplus_n_exact(const BigInt& a, const BigInt& b, const BigInt& N) {
    return a + b + exact_root(4 * a * b + N, "oplus_n_exact");
}

double oplus_n(double a, double b, double N) {
    double rad = 4 * a * b + N;
    if (rad < 0) throw std::domain_error("oplus_n: negative radicand");
    return a + b + std::sqrt(rad);
}

std::complex<double> oplus_n_complex(std::complex<double> a, std::complex<double> b,
                                     std::complex<double> N) {
    std::complex<double> z = 4.0 * a * b + N;
    // sqrt with the argument taken in [0, 2*pi)
    double r = std::abs(z);
    double theta = std::arg(z);  // (-pi, pi]
    if (theta < 0) theta += 2.0 * std::numbers::pi;
    std::complex<double> root = std::sqrt(r) * std::polar(1.0, theta / 2.0);
    return a + b + root;
}

BigInt b_value(const BigInt& n) {
    return b_pair(n).left;
}

BigInt b_closed(const BigInt& n) {
    if (n < 1) throw std::domain_error("b_closed: index must be >= 1");
    unsigned j = boost::multiprecision::msb(n);  // 2^j <= n < 2^{j+1}
    BigInt lo = BigInt(1) << j, hi = BigInt(1) << (j + 1);
    return stern(hi - n) * stern(n - lo);
}

BPair b_pair(const BigInt& n) {
    if (n < 1) throw std::domain_error("b_pair: index must be >= 1");
    BigInt x = 0, y = 0;  // (b_1, b_2)
    if (n == 1) return {x, y};
    unsigned top = boost::multiprecision::msb(n);
    for (int i = static_cast<int>(top) - 1; i >= 0; --i) {
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) {
            x = oplus(x, y);  // (b_m, b_{m+1}) -> (b_{2m+1}, b_{2m+2})
        } else {
            y = oplus(x, y);  // (b_m, b_{m+1}) -> (b_{2m}, b_{2m+1})
        }
    }
    return {x, y};
}

std::optional<BPair> m_oplus(const BPair& pr) {
    const BigInt& a = pr.left;
    const BigInt& b = pr.right;
    if (a < 0 || b < 0) throw std::domain_error("m_oplus: negative entry");
    exact_root(4 * a * b + 1, "m_oplus");  // validate the pair
    if (a == b) {
        if (a != 0) throw std::domain_error("m_oplus: invalid pair (equal nonzero entries)");
        return std::nullopt;  // (0, 0) is the root
    }
    if (a < b) return BPair{a, ominus(a, b)};
    return BPair{ominus(a, b), b};
}

PairPath b_path(BigInt x, BigInt y) {
    if (x < 0 || y < 0) throw std::domain_error("b_path: negative entry");
    PairPath path;
    BPair cur{std::move(x), std::move(y)};
    while (true) {
        if (cur.left == cur.right && cur.left != 0)
            throw std::domain_error("b_path: invalid pair (equal nonzero entries)");
        exact_root(4 * cur.left * cur.right + 1, "b_path");
        if (cur.left == 0 && cur.right == 0) break;
        if (cur.left < cur.right) {
            path.bits.push_back(0);
            cur.right = ominus(cur.left, cur.right);
        } else {
            path.bits.push_back(1);
            cur.left = ominus(cur.left, cur.right);
        }
    }
    return path;
}

BigInt b_pair_index(const BigInt& x, const BigInt& y) {
    return b_path(x, y).replay_index();
}

Rational g_value(const Dyadic& d) {
    if (d.num <= 0 || d.value() > 1) throw std::domain_error("g_value: argument outside (0, 1]");
    if (d.exp == 0) return 1;  // g(1) = 1
    BigInt k = d.num;
    BigInt denom_index = pow2(d.exp) + k;
    BigInt denom = b_value(denom_index);
    if (denom == 0) throw std::logic_error("g_value: zero denominator");
    return Rational(b_value(k), denom);
}

BigInt c_general(const BigInt& A, const BigInt& B, const BigInt& n) {
    BigInt a = stern(n);
    return A * a * a + B * b_value(n);
}

void BTable::ensure(size_t n) {
    std::lock_guard<std::mutex> lock(grow_);
    if (values_.size() > n) return;
    size_t old = values_.size();
    values_.resize(n + 1);
    if (old < 2) {
        values_[0] = 0;
        if (n >= 1) values_[1] = 0;
        old = 2;
    }
    for (size_t i = old; i <= n; ++i) {
        values_[i] = (i % 2 == 0) ? values_[i / 2] : oplus(values_[i / 2], values_[i / 2 + 1]);
    }
}

void BTable::adopt(std::vector<BigInt> v) {
    std::lock_guard<std::mutex> lock(grow_);
    if (v.size() > values_.size()) values_ = std::move(v);
}

}  // namespace diatomic
