#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diatomic/bigint.hpp"

namespace diatomic {

// F_1 = F_2 = 1, F_{n+1} = F_n + F_{n-1}; fib(0) = 0.
const BigInt& fib(size_t n);

// Fibonacci numbers F_0..F_n as a span-stable reference (thread-local cache).
const std::vector<BigInt>& fib_upto(size_t n);

// Zeckendorf word: bits least-significant first, bit j <-> F_{j+2}.
// Canonical words have no two adjacent ones.
struct ZeckWord {
    std::vector<uint8_t> bits;

    bool canonical() const;
    size_t popcount() const;
    BigInt value() const;
    // Digits most-significant first, e.g. 32 -> "1010100" (21 + 8 + 3).
    std::string render() const;
    // Index shift: every F_j in the support becomes F_{j+k}.
    ZeckWord shifted(unsigned k = 1) const;
};

// Greedy Zeckendorf encoding; zeck_encode(0) is the empty word.
ZeckWord zeck_encode(const BigInt& n);
BigInt zeck_decode(const ZeckWord& w);

}  // namespace diatomic
