#pragma once

#include <cstdint>
#include <vector>

#include "tg/error.hpp"

namespace tg {

// The dyadic interval separating x from y: the unique bit position f >= 1 and
// odd q >= 1 with (q-1)*2^(f-1) < x <= q*2^(f-1) < y <= (q+1)*2^(f-1).
struct DyadicSplit {
    int f = 0;
    long long q = 0;
    long long Tminus = 0, T = 0, Tplus = 0;  // (q-1), q, (q+1) times 2^(f-1)
};

// Computed from the binary expansions of x-1 and y-1: f-1 is their highest
// differing bit, q the shared high bits with a 1 appended.
DyadicSplit dyadic_split(long long x, long long y);

// Coordinate reflection v -> 2^n + 1 - v, reversed: an automorphism of the
// auxiliary graph on [2^n] tuples.
std::vector<int> eta(int b, int n, const std::vector<int>& x);

}  // namespace tg
