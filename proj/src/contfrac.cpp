#include "diatomic/contfrac.hpp"

#include <stdexcept>

namespace diatomic {

CFWord cf_encode(const Rational& x) {
    if (x <= 0 || x > 1) throw std::domain_error("cf_encode: argument outside (0, 1]");
    CFWord w;
    // Euclid on (p, q): the quotient sequence of q/p gives the terms and
    // terminates with last term >= 2 (or the single-term word [1] for x = 1).
    BigInt p = num(x), q = den(x);
    while (p != 0) {
        w.terms.push_back(q / p);
        BigInt r = q % p;
        q = p;
        p = r;
    }
    return w;
}

Rational cf_decode(const CFWord& w) {
    if (w.terms.empty()) throw std::domain_error("cf_decode: empty word");
    Rational x = 0;
    for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it) {
        if (*it < 1) throw std::domain_error("cf_decode: term < 1");
        x = Rational(1, 1) / (Rational(*it) + x);
    }
    return x;
}

CFWord cf_alternate(const CFWord& w) {
    if (w.terms.empty()) throw std::domain_error("cf_alternate: empty word");
    CFWord out = w;
    if (out.terms.back() == 1) {
        if (out.terms.size() == 1) throw std::domain_error("cf_alternate: [1] has no partner");
        out.terms.pop_back();
        out.terms.back() += 1;
    } else {
        out.terms.back() -= 1;
        out.terms.push_back(1);
    }
    return out;
}

}  // namespace diatomic
