#pragma once

#include <complex>
#include <mutex>
#include <optional>
#include <vector>

#include "diatomic/bigint.hpp"
#include "diatomic/dyadic.hpp"
#include "diatomic/stern.hpp"

namespace diatomic {

// a (+) b = a + b + sqrt(4ab + 1), defined (here) only when the radicand is a
// perfect square.  Commutative; 0 (+) b = b + 1.
BigInt oplus(const BigInt& a, const BigInt& b);

// a (-) b = a + b - sqrt(4ab + 1), the conjugate root; undoes (+) in the sense
// (a (+) b) (-) b = a.  May be negative only for (0, 0) -> -1.
BigInt ominus(const BigInt& a, const BigInt& b);

// Parametrised exact variant: a (+)_N b = a + b + sqrt(4ab + N).
BigInt oplus_n_exact(const BigInt& a, const BigInt& b, const BigInt& N);

// Floating variants for plots and spot checks.
double oplus_n(double a, double b, double N);
// Complex branch with arg(z) taken in [0, 2*pi), so sqrt(-1) = +i and the
// branch cut lies on the positive real axis.
std::complex<double> oplus_n_complex(std::complex<double> a, std::complex<double> b,
                                     std::complex<double> N);

// The (+)-analogue of Stern's sequence:
//   b_1 = 0, b_{2n} = b_n, b_{2n+1} = b_n (+) b_{n+1}.
// Closed form (used by b_closed): b_k = a_{2^{j+1} - k} * a_{k - 2^j} for
// 2^j <= k < 2^{j+1}.
BigInt b_value(const BigInt& n);
BigInt b_closed(const BigInt& n);

struct BPair {
    BigInt left, right;  // (b_n, b_{n+1})
    friend bool operator==(const BPair&, const BPair&) = default;
};

// (b_n, b_{n+1}) by the same bit descent as stern_pair, with + replaced by (+):
// bit 0: (x, y) -> (x, x (+) y); bit 1: (x, y) -> (x (+) y, y); root (0, 0).
BPair b_pair(const BigInt& n);

// One step of the inverse pair map: (a, b) -> (a, a (-) b) if a < b,
// (a (-) b, b) if a > b; std::nullopt at the fixed pair (0, 0).
// Throws std::domain_error if 4ab + 1 is not a perfect square or a == b != 0.
std::optional<BPair> m_oplus(const BPair& pr);

// Inverse of n -> (b_n, b_{n+1}): every valid pair occurs exactly once.
PairPath b_path(BigInt x, BigInt y);
BigInt b_pair_index(const BigInt& x, const BigInt& y);

// g on dyadics in (0, 1]: k/2^n -> b_k / b_{2^n + k}, and g(1) = 1.
Rational g_value(const Dyadic& d);

// c_n = A a_n^2 + B b_n, which satisfies c_{2n+1} = c_n (+)_N c_{n+1} with
// N = 4AB + B^2.
BigInt c_general(const BigInt& A, const BigInt& B, const BigInt& n);

// Shared prefix b_1..b_N (index 0 unused and set to 0).
class BTable {
  public:
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
