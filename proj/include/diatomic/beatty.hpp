#pragma once

#include <cstdint>

#include "diatomic/bigint.hpp"
#include "diatomic/fibonacci.hpp"

namespace diatomic {

// floor(m * phi) computed exactly: bracket phi between consecutive Fibonacci
// convergents F_{j+1}/F_j (below for odd j, above for even j) and escalate j
// until both sides give the same floor.  Never touches floating point.
BigInt floor_mult_phi(const BigInt& m);

// rho(n): shift every index in the Zeckendorf expansion up by one
// (sum F_{k_i} -> sum F_{k_i + 1}); equals floor(n*phi + 1/phi) = floor((n+1)*phi) - 1.
BigInt rho(const BigInt& n);

// rho2(n) = rho(rho(n)) = rho(n) + n (a two-step shift).
BigInt rho2(const BigInt& n);

// T(n) = rho(n + 1) - 1 = floor(n*phi + 2/phi); complementary to rho2 on Z+.
BigInt t_shift(const BigInt& n);

// Beatty floors used by cross-checks (all derived from floor_mult_phi via
// 1/phi = phi - 1, 1/phi^2 = 2 - phi, phi^2 = phi + 1):
//   floor(n*phi), floor(n*phi^2) = floor(n*phi) + n,
//   alpha(n) = floor(n*phi - 1/phi^2) = floor((n+1)*phi) - 2,
//   beta(n)  = floor(n*phi^2 + phi)  = floor((n+1)*phi) + n.
BigInt floor_phi(const BigInt& n);
BigInt floor_phi_sq(const BigInt& n);
BigInt alpha_beatty(const BigInt& n);
BigInt beta_beatty(const BigInt& n);

// Classification of n >= 1 as either rho2(m) or T(m) (exactly one holds;
// found by binary search on the strictly increasing exact maps).
struct ShiftClass {
    bool is_rho2;  // otherwise T
    BigInt m;
};
ShiftClass classify_shift(const BigInt& n);

// uint64 fast paths over a fixed Fibonacci table (used by table fills and
// sweeps; same values as the BigInt routes).
uint64_t rho_u64(uint64_t n);
inline uint64_t rho2_u64(uint64_t n) { return rho_u64(n) + n; }
inline uint64_t t_u64(uint64_t n) { return rho_u64(n + 1) - 1; }

}  // namespace diatomic
