#include "diatomic/dyadic.hpp"

#include <stdexcept>

namespace diatomic {

Dyadic::Dyadic(BigInt n, unsigned e) : num(std::move(n)), exp(e) {
    while (exp > 0 && num != 0 && (num & 1) == 0) {
        num >>= 1;
        --exp;
    }
    if (num == 0) exp = 0;
}

Rational Dyadic::value() const {
    return Rational(num, pow2(exp));
}

std::string Dyadic::str() const {
    if (exp == 0) return num.str();
    return num.str() + "/" + pow2(exp).str();
}

Dyadic dyadic_from_rational(const Rational& r) {
    BigInt d = den(r);
    unsigned e = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++e;
    }
    if (d != 1) throw std::domain_error("dyadic_from_rational: denominator not a power of two");
    return Dyadic(num(r), e);
}

}  // namespace diatomic
