#pragma once

#include <complex>
#include <cstdint>
#include <mutex>
#include <vector>

#include "diatomic/bigint.hpp"
#include "diatomic/eisenstein.hpp"

namespace diatomic {

// Stern's diatomic sequence:
//   a_0 = 0, a_1 = 1, a_{2n} = a_n, a_{2n+1} = a_n + a_{n+1}.
// Evaluated in O(log n) by the binary-descent (fusc) recurrence.
BigInt stern(const BigInt& n);

// Row j of the diatomic array: a_{2^j} .. a_{2^{j+1}} (2^j + 1 entries).
std::vector<BigInt> diatomic_row(unsigned j);

struct SternPair {
    BigInt left, right;  // (a_n, a_{n+1})
    friend bool operator==(const SternPair&, const SternPair&) = default;
};

// (a_n, a_{n+1}) for n >= 1, by most-significant-bit-first descent from (1, 1):
// bit 0: (x, y) -> (x, x + y); bit 1: (x, y) -> (x + y, y).
SternPair stern_pair(const BigInt& n);

// Branch record of a subtractive descent to the root pair.  Bit 0 = the index
// was even (came from 2m), bit 1 = odd (came from 2m + 1).  Replaying the bits
// most-significant-last rebuilds the index: n = 2n + bit, starting from n = 1.
struct PairPath {
    std::vector<uint8_t> bits;

    BigInt replay_index() const {
        BigInt n = 1;
        for (auto it = bits.rbegin(); it != bits.rend(); ++it) n = 2 * n + *it;
        return n;
    }
};

// Inverse of n -> (a_n, a_{n+1}) on coprime pairs (Stern's sequence lists each
// positive reduced fraction exactly once as a_n / a_{n+1}).
// Throws std::domain_error unless p, q >= 1 and gcd(p, q) == 1.
PairPath stern_path(BigInt p, BigInt q);
BigInt stern_index(const BigInt& p, const BigInt& q);

// Number of ones in the binary expansion.
inline unsigned s2(uint64_t n) { return static_cast<unsigned>(__builtin_popcountll(n)); }

// sum_{k=0}^{n} sigma^{s2(k)} * conj(sigma)^{s2(n-k)}; equals a_{n+1} in Z.
Eisenstein binet_sigma_stern(uint64_t n);

// Count of odd binomials C(n - i, i), 0 <= 2i <= n (diagonal of Pascal mod 2);
// equals a_{n+1}.
BigInt pascal_mod2_diagonal(uint64_t n);

// J(n) = (2^n - (-1)^n) / 3, n >= 1: positions where Stern's sequence takes
// Fibonacci values, a_{J(n)} = F_n.
BigInt jacobsthal(unsigned n);

// a_n / (3n)^{log2 phi}; the limsup over n of this ratio is 1/sqrt(5).
double coons_tyler_ratio(uint64_t n);

// max (and argmax) of coons_tyler_ratio over [lo, hi] using a table sweep
std::pair<double, uint64_t> coons_tyler_max(uint64_t lo, uint64_t hi);

struct ExpSum {
    std::complex<double> value;  // sum of e^{2 pi i p/q} over reduced p/q in (0,1), q < x
    long long mertens;           // sum_{q=2}^{x-1} mu(q), the same quantity exactly
    uint64_t terms;              // number of fractions summed
};

// The two sides of the Mertens-sum identity, computed by independent routes:
// the complex side enumerates reduced fractions via Stern-Brocot mediants, the
// integer side sieves the Moebius function.
ExpSum stern_exponential_sum(uint64_t x);

std::vector<int8_t> mobius_sieve(uint64_t n);

// Shared prefix a_0..a_N of Stern's sequence (single writer, then readers).
class SternTable {
  public:
    // Grow to cover indices 0..n.
    void ensure(size_t n);
    size_t size() const { return values_.size(); }
    const BigInt& at(size_t i) const { return values_[i]; }
    const std::vector<BigInt>& data() const { return values_; }
    void adopt(std::vector<BigInt> v);

  private:
    std::vector<BigInt> values_;
    std::mutex grow_;
};

}  // namespace diatomic
