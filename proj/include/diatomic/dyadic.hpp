#pragma once

#include <string>

#include "diatomic/bigint.hpp"

namespace diatomic {

// Dyadic rational num / 2^exp, kept canonical (num odd or exp == 0).
struct Dyadic {
    BigInt num = 0;
    unsigned exp = 0;

    Dyadic() = default;
    Dyadic(BigInt n, unsigned e);

    Rational value() const;
    std::string str() const;  // "k/2^n" reduced, e.g. "3/8"; integers plain

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.exp == b.exp;
    }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        return a.value() < b.value();
    }
};

// Throws std::domain_error when r is not dyadic.
Dyadic dyadic_from_rational(const Rational& r);

}  // namespace diatomic
