#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tg/error.hpp"
#include "tg/order_type.hpp"

namespace tg {

// Materialised graph: lexicographically enumerated vertex payloads plus a
// sorted edge list.  Payloads are k-subsets of [n] (type-graphs) or
// (2b-1)-tuples (auxiliary graphs), both as increasing int vectors.
struct Graph {
    enum class Kind { typegraph, auxiliary };

    Kind kind = Kind::typegraph;
    int n = 0;          // ground-set size (typegraph) or coordinate range (auxiliary)
    OrderType tau;      // typegraph only
    int b = 0;          // auxiliary only
    std::vector<std::vector<int>> vertices;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted lexicographically

    int vertex_count() const { return int(vertices.size()); }
    long long edge_count() const { return (long long)(edges.size()); }
    int index_of(const std::vector<int>& payload) const;  // -1 when absent
    std::vector<std::vector<int>> adjacency() const;      // neighbour lists
    std::string describe() const;                         // e.g. "typegraph n=8 type=132"
};

// All k-subsets of [n] / all auxiliary-graph tuples, lexicographically.
std::vector<std::vector<int>> k_subsets(int n, int k);
std::vector<std::vector<int>> gb_vertices(int b, int n);

// Membership in V_b(n): nondecreasing (2b-1)-tuple over [n] with strictly
// increasing odd positions x_1 < x_3 < ... < x_{2b-1}.
bool gb_vertex_ok(int b, int n, const std::vector<int>& x);

// Adjacency in the type-graph: the pair realises tau in one of the two
// orders.  Sets must be strictly increasing and of the width of tau.
bool adjacent_typegraph(const OrderType& tau, const std::vector<int>& X, const std::vector<int>& Y);

// Adjacency in the auxiliary graph: some orientation (x,y) satisfies
//   (i)  x_1 < y_1 <= x_3 < y_3 <= ... <= x_{2b-1} < y_{2b-1}
//   (ii) x_{j+1} <= y_j for all j in [2b-2].
bool adjacent_Gb(const std::vector<int>& x, const std::vector<int>& y);

Graph build_typegraph(int n, const OrderType& tau);
Graph build_Gb(int b, int n);

// DIMACS .col text: a comment line with the parameters, "p edge V E", then
// one "e u v" per edge with 1-based endpoints in enumeration order.
void export_dimacs(const Graph& g, std::ostream& out);
std::string graph_json(const Graph& g);

}  // namespace tg
