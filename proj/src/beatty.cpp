#include "diatomic/beatty.hpp"

#include <array>
#include <stdexcept>

namespace diatomic {

BigInt floor_mult_phi(const BigInt& m) {
    if (m < 0) throw std::domain_error("floor_mult_phi: negative argument");
    if (m == 0) return 0;
    // F_{j+1}/F_j < phi for odd j, > phi for even j; the gap shrinks as
    // 1/(F_j F_{j+1}), so the two floors coincide once F_j^2 exceeds ~m.
    for (unsigned j = 11; j <= 2048; j += 10) {
        const BigInt& lo_d = fib(j);        // j odd: below
        const BigInt& lo_n = fib(j + 1);
        const BigInt& hi_d = fib(j + 1);    // j+1 even: above
        const BigInt& hi_n = fib(j + 2);
        BigInt lo = floor_div(m * lo_n, lo_d);
        BigInt hi = floor_div(m * hi_n, hi_d);
        if (lo == hi) return lo;
    }
    throw std::logic_error("floor_mult_phi: brackets failed to converge");
}

BigInt rho(const BigInt& n) {
    if (n < 0) throw std::domain_error("rho: negative argument");
    return zeck_decode(zeck_encode(n).shifted(1));
}

BigInt rho2(const BigInt& n) {
    // shifting twice adds n: sum F_{k+2} = sum (F_{k+1} + F_k)
    return rho(n) + n;
}

BigInt t_shift(const BigInt& n) {
    if (n < 0) throw std::domain_error("t_shift: negative argument");
    return rho(n + 1) - 1;
}

BigInt floor_phi(const BigInt& n) { return floor_mult_phi(n); }

BigInt floor_phi_sq(const BigInt& n) {
    if (n < 0) throw std::domain_error("floor_phi_sq: negative argument");
    return floor_mult_phi(n) + n;
}

BigInt alpha_beatty(const BigInt& n) {
    if (n < 1) throw std::domain_error("alpha_beatty: index must be >= 1");
    return floor_mult_phi(n + 1) - 2;
}

BigInt beta_beatty(const BigInt& n) {
    if (n < 1) throw std::domain_error("beta_beatty: index must be >= 1");
    return floor_mult_phi(n + 1) + n;
}

uint64_t rho_u64(uint64_t n) {
    // F_2 .. F_87 (F_87 = 679891637638612258 is the largest Fibonacci number
    // for which the shifted sum still fits in uint64 for valid inputs)
    static const auto f = [] {
        std::array<uint64_t, 88> t{};
        t[1] = 1;
        t[2] = 1;
        for (size_t i = 3; i < t.size(); ++i) t[i] = t[i - 1] + t[i - 2];
        return t;
    }();
    if (n >= f[86]) throw std::range_error("rho_u64: argument too large");
    uint64_t rest = n, out = 0;
    size_t j = 86;
    while (rest > 0) {
        while (f[j] > rest) --j;
        rest -= f[j];
        out += f[j + 1];
    }
    return out;
}

ShiftClass classify_shift(const BigInt& n) {
    if (n < 1) throw std::domain_error("classify_shift: index must be >= 1");
    // largest m with rho2(m) <= n
    BigInt lo = 0, hi = n;  // rho2(n) >= n, rho2(0) = 0
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (rho2(mid) <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    if (rho2(lo) == n) return {true, lo};
    // otherwise n must be T(m); T(0) = 1 and T is strictly increasing
    BigInt tlo = 0, thi = n;
    while (tlo < thi) {
        BigInt mid = (tlo + thi + 1) / 2;
        if (t_shift(mid) <= n) {
            tlo = mid;
        } else {
            thi = mid - 1;
        }
    }
    if (t_shift(tlo) != n)
        throw std::logic_error("classify_shift: index in neither sequence");
    return {false, tlo};
}

}  // namespace diatomic
