#pragma once

#include <string>
#include <vector>

#include "tg/coloring.hpp"
#include "tg/error.hpp"
#include "tg/graph.hpp"

namespace tg {

struct Budget {
    long long max_nodes = 2'000'000'000;
    long long max_ms = 300'000;
};

struct ChromaticResult {
    int chi = -1;                // -1 when the budget ran out first
    int lower = 0;               // certified bounds: lower <= chi <= upper
    int upper = 0;
    std::vector<int> colors;     // best verified proper colouring found (chi or upper colours)
    long long nodes_explored = 0;
    long long elapsed_ms = 0;
    bool budget_exceeded = false;
};

// First-fit along the given vertex order; proper by construction.
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);

// Greedy clique on descending degree (ties by lowest index): a cheap,
// sound lower bound for the colour count.
std::vector<int> greedy_clique(const Graph& g);

// Exact chromatic number by ascending k-colourability: each k first shrinks
// the graph (low-degree peeling and dominated-vertex removal), then tries a
// capped saturation-degree search, then settles the question with a
// memoised fixed-order search.  Deterministic throughout.
ChromaticResult exact_chromatic(const Graph& g, const Budget& budget = {});

std::string chromatic_json(const ChromaticResult& r);

}  // namespace tg
