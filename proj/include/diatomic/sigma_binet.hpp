#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "diatomic/bigint.hpp"
#include "diatomic/eisenstein.hpp"

namespace diatomic {

// s_F(n): number of terms in the Zeckendorf expansion of n (Fibonacci digit sum).
unsigned s_f(uint64_t n);

// Shared prefix s_F(0)..s_F(N).
class SfTable {
  public:
    void ensure(size_t n);
    size_t size() const { return values_.size(); }
    unsigned at(size_t i) const { return values_[i]; }
    const std::vector<uint32_t>& data() const { return values_; }
    void adopt(std::vector<uint32_t> v);

  private:
    std::vector<uint32_t> values_;
    std::mutex grow_;
};

// The sigma-Binet Zeckendorf sequence, for sigma = exp(i*pi/3):
//   c_n = sum_{k=0}^{n-1} sigma^{s_F(k)} * conj(sigma)^{s_F(n-1-k)}
// Always a rational integer; throws std::logic_error if the sigma-coefficient
// of the exact Z[sigma] sum is ever nonzero.  c_0 = 0 (empty sum).
BigInt c_sigma(uint64_t n, SfTable& sf);

// Shared prefix c_0..c_N (c_0 = 0); the fill is O(N^2) single additions and
// partitions across jobs threads.
class CTable {
  public:
    void ensure(size_t n, SfTable& sf, unsigned jobs = 1);
    size_t size() const { return values_.size(); }
    const BigInt& at(size_t i) const { return values_[i]; }
    const std::vector<BigInt>& data() const { return values_; }
    void adopt(std::vector<BigInt> v);

  private:
    std::vector<BigInt> values_;
    std::mutex grow_;
};

// Crushed arrays over the Fibonacci block structure: row i (1-based) holds
// indices F_{i+1} .. F_{i+2} - 1 (F_i entries).
std::vector<std::vector<uint32_t>> crushed_array_sf(unsigned rows, SfTable& sf);
std::vector<std::vector<BigInt>> crushed_array_c(unsigned rows, SfTable& sf, CTable& c,
                                                 unsigned jobs = 1);

struct ConjectureEntry {
    std::string id;           // "i" .. "iv"
    std::string description;
    uint64_t bound = 0;       // sweep bound actually used
    uint64_t cases = 0;
    std::vector<std::string> violations;  // empty = conjecture held
    double seconds = 0;
};

struct ConjectureReport {
    uint64_t bound = 0;
    std::string note;
    std::vector<ConjectureEntry> entries;
    uint64_t total_violations() const {
        uint64_t v = 0;
        for (const auto& e : entries) v += e.violations.size();
        return v;
    }
};

// Sweep the four reported conjectures up to the bound (indices derived from n
// range over the c-prefix that the bound induces).  Reports, never asserts.
ConjectureReport run_conjectures(uint64_t bound, SfTable& sf, CTable& c, unsigned jobs = 1);

}  // namespace diatomic
