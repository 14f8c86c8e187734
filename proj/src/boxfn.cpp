#include "diatomic/boxfn.hpp"

#include <stdexcept>

#include "diatomic/contfrac.hpp"
#include "diatomic/stern.hpp"

namespace diatomic {

Rational conway_f(const Dyadic& d) {
    if (d.num < 0 || d.value() > 1) throw std::domain_error("conway_f: argument outside [0, 1]");
    if (d.num == 0) return 0;
    BigInt k = d.num;
    BigInt denom_index = pow2(d.exp) + k;
    return Rational(stern(k), stern(denom_index));
}

Dyadic question_mark(const Rational& x) {
    if (x < 0 || x > 1) throw std::domain_error("question_mark: argument outside [0, 1]");
    if (x == 0) return Dyadic();
    CFWord w = cf_encode(x);
    Rational sum = 0;
    BigInt partial = 0;  // a_1 + ... + a_i
    int sign = 1;
    for (const BigInt& a : w.terms) {
        partial += a;
        if (partial > 100000) throw std::range_error("question_mark: continued fraction too deep");
        unsigned e = partial.convert_to<unsigned>();
        Rational term(2, pow2(e));
        sum += sign > 0 ? term : -term;
        sign = -sign;
    }
    return dyadic_from_rational(sum);
}

std::vector<SamplePoint> sample_singular(SingularFn fn, unsigned depth) {
    if (depth > 20) throw std::range_error("sample_singular: depth too large");
    std::vector<SamplePoint> out;
    BigInt top = pow2(depth);
    out.reserve((size_t{1} << depth) + 1);
    for (BigInt k = 0; k <= top; ++k) {
        Dyadic d(k, depth);
        Rational fx = conway_f(d);
        if (fn == SingularFn::box) {
            out.push_back({d.value(), fx});
        } else {
            out.push_back({fx, d.value()});
        }
    }
    return out;
}

}  // namespace diatomic
