#include "tg/graph.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"
#include "tg/realization.hpp"

namespace tg {

int Graph::index_of(const std::vector<int>& payload) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), payload);
    if (it == vertices.end() || *it != payload) return -1;
    return int(it - vertices.begin());
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& [u, v] : edges) {
        adj[std::size_t(u)].push_back(v);
        adj[std::size_t(v)].push_back(u);
    }
    return adj;
}

std::string Graph::describe() const {
    if (kind == Kind::typegraph)
        return "typegraph n=" + std::to_string(n) + " type=" + tau.str();
    return "auxiliary b=" + std::to_string(b) + " n=" + std::to_string(n);
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    // standard lexicographic successor on increasing k-tuples from [n]
    for (int i = 0; i < k; ++i) cur[std::size_t(i)] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[std::size_t(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[std::size_t(i)];
        for (int j = i + 1; j < k; ++j) cur[std::size_t(j)] = cur[std::size_t(j) - 1] + 1;
    }
    return out;
}

namespace {

void gb_extend(int b, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    const int len = 2 * b - 1;
    const int pos = int(cur.size());
    if (pos == len) {
        out.push_back(cur);
        return;
    }
    int lo = cur.empty() ? 1 : cur.back();  // nondecreasing throughout
    if (pos >= 2 && pos % 2 == 0)           // even 0-based = strictly increasing coordinates
        lo = std::max(lo, cur[std::size_t(pos) - 2] + 1);
    for (int v = lo; v <= n; ++v) {
        cur.push_back(v);
        gb_extend(b, n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> gb_vertices(int b, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(std::size_t(2 * b - 1));
    gb_extend(b, n, cur, out);
    return out;
}

bool gb_vertex_ok(int b, int n, const std::vector<int>& x) {
    if (int(x.size()) != 2 * b - 1) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1 || x[i] > n) return false;
        if (i > 0 && x[i] < x[i - 1]) return false;
        if (i >= 2 && i % 2 == 0 && x[i] <= x[i - 2]) return false;
    }
    return true;
}

bool adjacent_typegraph(const OrderType& tau, const std::vector<int>& X, const std::vector<int>& Y) {
    const int k = tau.width();
    if (int(X.size()) != k || int(Y.size()) != k)
        fail(errc::WidthMismatch, "sets of sizes " + std::to_string(X.size()) + "/" +
                                      std::to_string(Y.size()) + " against width " + std::to_string(k));
    const OrderType xy = order_type_of(X, Y);
    return xy == tau || dual(xy) == tau;  // dual(xy) = order_type_of(Y, X)
}

namespace {

// The ordered adjacency clause of the auxiliary graphs, 0-based coordinates.
bool gb_ordered(const std::vector<int>& x, const std::vector<int>& y) {
    const int len = int(x.size());
    for (int t = 0; t < len; t += 2) {
        if (!(x[std::size_t(t)] < y[std::size_t(t)])) return false;       // (i) x_odd < y_odd
        if (t + 2 < len && !(y[std::size_t(t)] <= x[std::size_t(t) + 2])) return false;  // (i) y_odd <= next x_odd
    }
    for (int j = 1; j < len; ++j)
        if (!(x[std::size_t(j)] <= y[std::size_t(j) - 1])) return false;  // (ii)
    return true;
}

}  // namespace

bool adjacent_Gb(const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size() || x.size() % 2 == 0)
        fail(errc::DimensionMismatch, "tuples of sizes " + std::to_string(x.size()) + " and " +
                                          std::to_string(y.size()));
    return gb_ordered(x, y) || gb_ordered(y, x);
}

namespace {

// Shift-template fast path: tau = 1 3^{k-1} 2 joins {h_1..h_k} to
// {h_2..h_{k+1}} for every (k+1)-subset, and nothing else.
bool is_sigma_shape(const OrderType& tau) {
    const int len = tau.length();
    if (len < 2) return false;
    if (tau.marks.front() != 1 || tau.marks.back() != 2) return false;
    for (int i = 1; i + 1 < len; ++i)
        if (tau.marks[std::size_t(i)] != 3) return false;
    return true;
}

}  // namespace

Graph build_typegraph(int n, const OrderType& tau) {
    if (tau.trivial()) fail(errc::TrivialType, "type-graphs need a nontrivial type");
    const int k = tau.width();
    if (n < k) fail(errc::TooSmall, "n=" + std::to_string(n) + " below width " + std::to_string(k));

    Graph g;
    g.kind = Graph::Kind::typegraph;
    g.n = n;
    g.tau = tau;
    g.vertices = k_subsets(n, k);

    if (is_sigma_shape(tau)) {
        for (const auto& h : k_subsets(n, k + 1)) {
            const std::vector<int> a(h.begin(), h.end() - 1);
            const std::vector<int> b(h.begin() + 1, h.end());
            int ia = g.index_of(a), ib = g.index_of(b);
            g.edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
        }
        std::sort(g.edges.begin(), g.edges.end());
    } else {
        const int V = g.vertex_count();
        for (int i = 0; i < V; ++i)
            for (int j = i + 1; j < V; ++j)
                if (adjacent_typegraph(tau, g.vertices[std::size_t(i)], g.vertices[std::size_t(j)]))
                    g.edges.emplace_back(i, j);
    }
    return g;
}

Graph build_Gb(int b, int n) {
    if (b < 1 || n < 1) fail(errc::BadRange, "need b >= 1 and n >= 1");
    Graph g;
    g.kind = Graph::Kind::auxiliary;
    g.n = n;
    g.b = b;
    g.vertices = gb_vertices(b, n);
    const int V = g.vertex_count();
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (adjacent_Gb(g.vertices[std::size_t(i)], g.vertices[std::size_t(j)]))
                g.edges.emplace_back(i, j);
    return g;
}

void export_dimacs(const Graph& g, std::ostream& out) {
    out << "c " << g.describe() << "\n";
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string graph_json(const Graph& g) {
    nlohmann::json j;
    j["kind"] = g.kind == Graph::Kind::typegraph ? "typegraph" : "auxiliary";
    j["n"] = g.n;
    if (g.kind == Graph::Kind::typegraph)
        j["type"] = g.tau.str();
    else
        j["b"] = g.b;
    j["vertices"] = g.vertices;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    return j.dump();
}

}  // namespace tg
