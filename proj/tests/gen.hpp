#pragma once

// Deterministic generators shared by the property tests.  Everything is
// seeded explicitly so failures reproduce bit-for-bit.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tg/order_type.hpp"

namespace gen {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random balanced mark sequence: w 1s, w 2s, t 3s in random order.
inline tg::OrderType random_type(Rng& rng, int max_width = 5, int max_threes = 3) {
    const int w = pick(rng, 1, max_width);
    const int t = pick(rng, 0, max_threes);
    std::vector<std::uint8_t> m;
    m.insert(m.end(), std::size_t(w), 1);
    m.insert(m.end(), std::size_t(w), 2);
    m.insert(m.end(), std::size_t(t), 3);
    std::shuffle(m.begin(), m.end(), rng);
    return tg::OrderType(std::move(m));
}

// Rejection-samples a nontrivial irreducible type; primary if requested.
inline tg::OrderType random_irreducible(Rng& rng, bool primary_only, int max_width = 5) {
    for (;;) {
        tg::OrderType t = random_type(rng, max_width);
        if (t.trivial() || !tg::is_irreducible(t)) continue;
        if (primary_only && t.marks.front() != 1) continue;
        return t;
    }
}

// Random strictly increasing integer set of the given size within [1, hi].
inline std::vector<int> random_subset(Rng& rng, int size, int hi) {
    std::vector<int> pool(static_cast<std::size_t>(hi));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::size_t(size));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace gen
