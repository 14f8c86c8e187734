#pragma once

#include <vector>

#include "diatomic/bigint.hpp"
#include "diatomic/dyadic.hpp"

namespace diatomic {

// Conway's box function on dyadics in [0, 1]: k/2^n -> a_k / a_{2^n + k}.
// Inverse of Minkowski's question-mark function on these points.
Rational conway_f(const Dyadic& d);

// Minkowski's ?-function on rationals in [0, 1], computed from the continued
// fraction [a_1, ..., a_m]:
//   ?(x) = 2 * sum_{i=1..m} (-1)^{i+1} / 2^{a_1 + ... + a_i}
// The value is always dyadic; ?(0) = 0 (empty series).
Dyadic question_mark(const Rational& x);

struct SamplePoint {
    Rational x, y;
};

enum class SingularFn { box, question };

// Graph samples over the dyadic grid of the given depth, sorted by x:
// box: (k/2^d, f(k/2^d)); question: (f(k/2^d), k/2^d) -- the reflected graph,
// so both sample exactly (and only) points with exact coordinates.
std::vector<SamplePoint> sample_singular(SingularFn fn, unsigned depth);

}  // namespace diatomic
