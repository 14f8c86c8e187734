#include "diatomic/fibonacci.hpp"

#include <stdexcept>

namespace diatomic {

const std::vector<BigInt>& fib_upto(size_t n) {
    thread_local std::vector<BigInt> table{0, 1, 1};
    while (table.size() <= n) {
        table.push_back(table[table.size() - 1] + table[table.size() - 2]);
    }
    return table;
}

const BigInt& fib(size_t n) {
    return fib_upto(n)[n];
}

bool ZeckWord::canonical() const {
    for (size_t j = 0; j + 1 < bits.size(); ++j) {
        if (bits[j] && bits[j + 1]) return false;
    }
    return bits.empty() || bits.back();  // no leading zero at the top
}

size_t ZeckWord::popcount() const {
    size_t c = 0;
    for (uint8_t b : bits) c += b;
    return c;
}

BigInt ZeckWord::value() const {
    BigInt v = 0;
    const auto& f = fib_upto(bits.size() + 2);
    for (size_t j = 0; j < bits.size(); ++j) {
        if (bits[j]) v += f[j + 2];
    }
    return v;
}

std::string ZeckWord::render() const {
    if (bits.empty()) return "0";
    std::string s;
    s.reserve(bits.size());
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) s.push_back(*it ? '1' : '0');
    return s;
}

ZeckWord ZeckWord::shifted(unsigned k) const {
    if (bits.empty() || k == 0) return *this;
    ZeckWord out;
    out.bits.assign(bits.size() + k, 0);
    for (size_t j = 0; j < bits.size(); ++j) out.bits[j + k] = bits[j];
    return out;
}

ZeckWord zeck_encode(const BigInt& n) {
    if (n < 0) throw std::domain_error("zeck_encode: negative argument");
    ZeckWord w;
    if (n == 0) return w;
    size_t top = 2;
    while (fib(top + 1) <= n) ++top;
    w.bits.assign(top - 1, 0);
    BigInt rest = n;
    for (size_t j = top; j >= 2; --j) {
        if (fib(j) <= rest) {
            rest -= fib(j);
            w.bits[j - 2] = 1;
        }
    }
    if (rest != 0) throw std::logic_error("zeck_encode: greedy residue");
    return w;
}

BigInt zeck_decode(const ZeckWord& w) {
    return w.value();
}

}  // namespace diatomic
