#pragma once

#include <complex>
#include <cstdint>
#include <mutex>
#include <vector>

#include "diatomic/beatty.hpp"
#include "diatomic/bigint.hpp"
#include "diatomic/contfrac.hpp"

namespace diatomic {

// R_n: number of ways to write n as a sum of distinct Fibonacci numbers
// F_2, F_3, ... (each number usable once); R_0 = 1 (empty sum).

// Reference route: subset-sum DP over the Fibonacci numbers <= n.
BigInt r_count(uint64_t n);
// Same DP, returning the whole table R_0..R_n.
std::vector<BigInt> r_table_dp(uint64_t n);

// Recursive route via the shift classification:
//   R_{rho2(m)} = R_m + R_{m-1},  R_{T(m)} = R_m.
BigInt r_count_recursive(uint64_t n);

// Shared prefix R_0..R_N, filled by walking rho2 and T with two pointers
// (which verifies on the fly that the two sequences tile 1..N).
class RTable {
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

// q(k, n) = R_k / R_{F_n + k} for 0 <= k < F_{n-1} (reduced rational), and the
// raw (unreduced) value pair it is built from.
Rational q_value(uint64_t k, unsigned n, RTable& table);
std::pair<BigInt, BigInt> q_raw(uint64_t k, unsigned n, RTable& table);

// Series for Q^{-1} at the point with continued fraction [c_1, c_2, ...]:
//   sum_k (-1)^{k+1} / phi^{2(c_1 + ... + c_k) - 1}
// depth = 0: evaluate the full (finite) word; depth = d > 0: extend the word
// cyclically to d terms (for periodic continued fractions).
double q_inverse_series(const CFWord& cf, unsigned depth = 0);

// Crushed array of R: row i (1-based) holds R_{F_{i+2}-1} .. R_{F_{i+3}-2},
// i.e. the rows of the diatomic-array analogue after removing duplicates;
// row i has F_{i+1} entries and starts with 1.
struct RCrushedArray {
    std::vector<std::vector<BigInt>> rows;
};
RCrushedArray crushed_array_r(unsigned rows, RTable& table);

// The planar graph of binary words under the value map
// [i_1 .. i_L] = sum_j i_j F_{L+2-j}: vertex = (row, value), where row r
// holds the words of length r - 1 (distinct values 0 .. F_{r+2} - 2, since
// words of equal length and value share a vertex).  Appending a digit j
// sends value m to rho(m) + j, so each vertex has exactly two children.
// Placement: P(omega) = sum_k phi^{-k} (2 omega_k - 1 - i), apex at 0; the
// number of root paths into (r, m) equals R_m whenever m <= F_{r+1} - 1.
struct GraphVertex {
    unsigned row = 1;     // 1-based; row 1 is the apex (empty word, value 0)
    uint64_t value = 0;   // [omega]
    double x = 0, y = 0;  // re P, im P (y is <= 0)
    BigInt paths;         // number of root paths; equals R_value in stable rows
};

struct GraphG {
    unsigned depth = 0;  // maximum word length; the graph has depth + 1 rows
    std::vector<GraphVertex> vertices;          // sorted by (row, value)
    std::vector<std::pair<size_t, size_t>> edges;  // indices into vertices
    const GraphVertex* find(unsigned row, uint64_t value) const;
};

// All words of length <= depth, i.e. rows 1 .. depth + 1.
GraphG graph_g(unsigned depth);

}  // namespace diatomic
