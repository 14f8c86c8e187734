#pragma once

#include <string>

#include "diatomic/bigint.hpp"

namespace diatomic {

// Z[sigma] for sigma = exp(i*pi/3), a primitive sixth root of unity.
// Basis {1, sigma} with sigma^2 = sigma - 1, so
//   (a + b s)(c + d s) = (ac - bd) + (ad + bc + bd) s.
// Conjugation: conj(sigma) = 1 - sigma; sigma * conj(sigma) = 1; sigma^6 = 1.
struct Eisenstein {
    BigInt re = 0;  // coefficient of 1
    BigInt si = 0;  // coefficient of sigma

    Eisenstein() = default;
    Eisenstein(BigInt r, BigInt s) : re(std::move(r)), si(std::move(s)) {}

    bool is_rational_integer() const { return si == 0; }
    std::string str() const {
        if (si == 0) return re.str();
        return re.str() + (si < 0 ? " - " : " + ") + BigInt(abs(si)).str() + "*sigma";
    }

    friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
    friend Eisenstein operator+(const Eisenstein& a, const Eisenstein& b) {
        return {a.re + b.re, a.si + b.si};
    }
    friend Eisenstein operator-(const Eisenstein& a, const Eisenstein& b) {
        return {a.re - b.re, a.si - b.si};
    }
    friend Eisenstein operator*(const Eisenstein& a, const Eisenstein& b) {
        return {a.re * b.re - a.si * b.si,
                a.re * b.si + a.si * b.re + a.si * b.si};
    }
    Eisenstein& operator+=(const Eisenstein& o) {
        re += o.re;
        si += o.si;
        return *this;
    }
};

inline Eisenstein eis_sigma() { return {0, 1}; }
inline Eisenstein eis_conj(const Eisenstein& z) {
    // conj(a + b*sigma) = a + b*(1 - sigma)
    return {z.re + z.si, -z.si};
}

// sigma^k (k may be any integer; powers have period 6):
//   1, sigma, sigma - 1, -1, -sigma, 1 - sigma
inline Eisenstein sigma_pow(long long k) {
    static const int tab[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    int i = static_cast<int>(((k % 6) + 6) % 6);
    return {tab[i][0], tab[i][1]};
}

// conj(sigma)^k = sigma^{-k}
inline Eisenstein sigma_bar_pow(long long k) { return sigma_pow(-k); }

}  // namespace diatomic
