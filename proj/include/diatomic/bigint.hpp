#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace diatomic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct IsqrtResult {
    BigInt root;     // floor(sqrt(n))
    bool perfect;    // root * root == n
};

// Floor integer square root with an exactness flag.  n must be >= 0.
inline IsqrtResult isqrt_exact(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt_exact: negative argument");
    BigInt root = boost::multiprecision::sqrt(n);
    return IsqrtResult{root, root * root == n};
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && isqrt_exact(n).perfect;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Floor division for a >= 0, b > 0 (cpp_int division truncates toward zero,
// which coincides with floor on nonnegative operands).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw std::domain_error("floor_div: nonpositive divisor");
    if (a >= 0) return a / b;
    BigInt q = a / b;
    if (q * b != a) --q;
    return q;
}

inline BigInt floor_rational(const Rational& r) {
    return floor_div(num(r), den(r));
}

inline BigInt pow2(unsigned e) {
    return BigInt(1) << e;
}

// "p/q" (or plain integer when q == 1); cpp_rational keeps values reduced.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace diatomic
