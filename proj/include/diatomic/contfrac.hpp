#pragma once

#include <vector>

#include "diatomic/bigint.hpp"

namespace diatomic {

// Continued fraction of a rational in (0, 1]:
//   x = 1/(a_1 + 1/(a_2 + ... + 1/a_m))
// Canonical form: all terms >= 1 and the last term >= 2, except x = 1 -> [1].
// So 1/2 = [2], 2/5 = [2, 2], 1/3 = [3].
struct CFWord {
    std::vector<BigInt> terms;
};

CFWord cf_encode(const Rational& x);
Rational cf_decode(const CFWord& w);

// The other representation of the same value: [.., a_m] <-> [.., a_m - 1, 1].
CFWord cf_alternate(const CFWord& w);

}  // namespace diatomic
