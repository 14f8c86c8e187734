#pragma once

#include "diatomic/fibrep.hpp"
#include "diatomic/oplus.hpp"
#include "diatomic/sigma_binet.hpp"
#include "diatomic/stern.hpp"

namespace diatomic {

// Shared memoised prefixes for the five sequences.  Fill (ensure) is
// serialised per table; sweeps ensure first, then read concurrently.
struct Workspace {
    SternTable stern;
    BTable b;
    RTable r;
    SfTable sf;
    CTable c;
};

}  // namespace diatomic
