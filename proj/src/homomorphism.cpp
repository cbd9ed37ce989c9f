#include "tg/homomorphism.hpp"

#include <algorithm>

#include "json.hpp"
#include "tg/realization.hpp"

namespace tg {

namespace {

std::string payload_str(const std::vector<int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// Primary decomposition of an irreducible nontrivial type; secondary types
// are replaced by their dual, which generates the same graphs.
BlockDecomposition primary_decomposition(const OrderType& tau, OrderType& used) {
    if (tau.trivial()) fail(errc::TrivialType, "type " + (tau.length() ? tau.str() : std::string("(empty)")));
    if (!is_irreducible(tau)) fail(errc::Reducible, "type " + tau.str() + " factorises");
    used = tau;
    BlockDecomposition dec = block_decompose(tau);
    if (dec.polarity == Polarity::secondary) {
        used = dual(tau);
        dec = block_decompose(used);
    }
    return dec;
}

int type_width(const std::vector<OrderType>& blocks) {
    int k = 0;
    for (const auto& blk : blocks)
        for (auto m : blk.marks) k += (m == 1 || m == 3);
    return k;
}

std::string typegraph_desc(int n, const std::string& type) {
    return "typegraph n=" + std::to_string(n) + " type=" + type;
}

std::string shift_source_desc(int b, int n) {
    return typegraph_desc(n, b == 2 ? "12" : sigma(b - 1).str());
}

}  // namespace

std::vector<std::vector<int>> build_R_sets(const BlockDecomposition& dec) {
    if (dec.polarity == Polarity::trivial)
        fail(errc::TrivialType, "no scaffolding sets for the trivial type");
    if (dec.polarity == Polarity::secondary)
        fail(errc::NotIrreducible, "need the decomposition of a primary type");
    const int b = dec.b();
    std::vector<RationalSet> R(std::size_t(b) + 1);
    for (int i = 1; i <= b; ++i)
        R[std::size_t(i)] = extend_left(dec.blocks[std::size_t(i) - 1], R[std::size_t(i) - 1]);
    if (!R[std::size_t(b)].empty())
        fail(errc::SizeMismatch, "last scaffolding set should be empty");
    const auto star = rank_normalize(R);
    const int k = type_width(dec.blocks);
    std::size_t total = 0;
    for (int i = 0; i < b; ++i) total += star[std::size_t(i)].size();
    if (int(total) != k)
        fail(errc::SizeMismatch, "scaffolding sets cover " + std::to_string(total) +
                                     " ranks, width is " + std::to_string(k));
    return star;
}

VertexMap hom_lower(const OrderType& tau, int n) {
    OrderType used;
    const BlockDecomposition dec = primary_decomposition(tau, used);
    const int b = dec.b();
    const int k = used.width();
    if (n < b) fail(errc::TooSmall, "n=" + std::to_string(n) + " below block count " + std::to_string(b));
    const auto star = build_R_sets(dec);

    VertexMap m;
    m.source_desc = shift_source_desc(b, n);
    m.target_desc = typegraph_desc(k * n, tau.str());
    m.source_vertices = k_subsets(n, b - 1);
    m.images.reserve(m.source_vertices.size());
    for (const auto& H : m.source_vertices) {
        std::vector<int> img;
        img.reserve(std::size_t(k));
        for (int i = 1; i <= b - 1; ++i)
            for (int j : star[std::size_t(i)]) img.push_back((H[std::size_t(i) - 1] - 1) * k + j);
        std::sort(img.begin(), img.end());
        m.images.push_back(std::move(img));
    }
    return m;
}

std::vector<int> hom_upper(const OrderType& tau, const std::vector<int>& X) {
    OrderType used;
    const BlockDecomposition dec = primary_decomposition(tau, used);
    const int k = used.width();
    if (int(X.size()) != k)
        fail(errc::WidthMismatch, "set of size " + std::to_string(X.size()) + " against width " +
                                      std::to_string(k));
    for (std::size_t i = 1; i < X.size(); ++i)
        if (X[i] <= X[i - 1]) fail(errc::BadRange, "vertex set must be strictly increasing");
    const int b = dec.b();
    std::vector<int> img;
    img.reserve(std::size_t(2 * (b - 1) - 1));
    img.push_back(X[std::size_t(dec.s[0])]);  // x_{s(1)+1}
    for (int i = 2; i <= b - 1; ++i) {
        const int si = dec.s[std::size_t(i) - 1];
        img.push_back(X[std::size_t(si) - 1]);  // x_{s(i)}
        img.push_back(X[std::size_t(si)]);      // x_{s(i)+1}
    }
    return img;
}

std::vector<int> hom_project(const OrderType& tau, int i, const std::vector<int>& X) {
    const auto factors = factorize(tau);
    if (i < 1 || i > int(factors.size()))
        fail(errc::IndexOut, "factor " + std::to_string(i) + " of " + std::to_string(factors.size()));
    if (int(X.size()) != tau.width())
        fail(errc::WidthMismatch, "set of size " + std::to_string(X.size()) + " against width " +
                                      std::to_string(tau.width()));
    int r = 0;
    for (int j = 1; j < i; ++j) r += factors[std::size_t(j) - 1].width();
    const int s = r + factors[std::size_t(i) - 1].width();
    return std::vector<int>(X.begin() + r, X.begin() + s);
}

VertexMap hom_reducible(const OrderType& tau, int n) {
    if (tau.trivial()) fail(errc::TrivialType, "type " + (tau.length() ? tau.str() : std::string("(empty)")));
    const auto factors = factorize(tau);
    const int t = int(factors.size());

    std::vector<int> bcount(static_cast<std::size_t>(t));
    std::vector<int> widths(static_cast<std::size_t>(t));
    int bstar = 0;
    for (int i = 0; i < t; ++i) {
        bcount[std::size_t(i)] = block_decompose(factors[std::size_t(i)]).b();
        widths[std::size_t(i)] = factors[std::size_t(i)].width();
        bstar = std::max(bstar, bcount[std::size_t(i)]);
    }
    if (n < bstar) fail(errc::TooSmall, "n=" + std::to_string(n) + " below block count " + std::to_string(bstar));
    const int k = tau.width();

    // prefix widths: factor i occupies the value range (c_{i-1} n, c_i n]
    std::vector<int> c(std::size_t(t) + 1, 0);
    for (int i = 1; i <= t; ++i) c[std::size_t(i)] = c[std::size_t(i) - 1] + widths[std::size_t(i) - 1];

    std::vector<VertexMap> lows(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        if (!factors[std::size_t(i)].trivial()) lows[std::size_t(i)] = hom_lower(factors[std::size_t(i)], n);

    VertexMap m;
    m.source_desc = shift_source_desc(bstar, n);
    m.target_desc = typegraph_desc(k * n, tau.str());
    m.source_vertices = k_subsets(n, bstar - 1);
    m.images.reserve(m.source_vertices.size());
    for (const auto& X : m.source_vertices) {
        std::vector<int> img;
        img.reserve(std::size_t(k));
        for (int i = 1; i <= t; ++i) {
            if (factors[std::size_t(i) - 1].trivial()) {
                img.push_back(c[std::size_t(i)] * n);
                continue;
            }
            const auto& low = lows[std::size_t(i) - 1];
            const std::vector<int> head(X.begin(), X.begin() + (bcount[std::size_t(i) - 1] - 1));
            const auto it = std::lower_bound(low.source_vertices.begin(), low.source_vertices.end(), head);
            for (int v : low.images[std::size_t(it - low.source_vertices.begin())])
                img.push_back(c[std::size_t(i) - 1] * n + v);
        }
        std::sort(img.begin(), img.end());
        m.images.push_back(std::move(img));
    }
    return m;
}

TargetView typegraph_view(int n, const OrderType& tau) {
    const int k = tau.width();
    TargetView view;
    view.is_vertex = [n, k](const std::vector<int>& x) {
        if (int(x.size()) != k) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < 1 || x[i] > n) return false;
            if (i > 0 && x[i] <= x[i - 1]) return false;
        }
        return true;
    };
    view.adjacent = [tau](const std::vector<int>& x, const std::vector<int>& y) {
        return adjacent_typegraph(tau, x, y);
    };
    return view;
}

TargetView gb_view(int b, int n) {
    TargetView view;
    view.is_vertex = [b, n](const std::vector<int>& x) { return gb_vertex_ok(b, n, x); };
    view.adjacent = [](const std::vector<int>& x, const std::vector<int>& y) { return adjacent_Gb(x, y); };
    return view;
}

namespace {

void check_coverage(const Graph& src, const VertexMap& m) {
    if (m.source_vertices != src.vertices || m.images.size() != m.source_vertices.size())
        fail(errc::CoverageGap, "map is not defined on exactly the source vertex set");
}

long long count_collisions(std::vector<std::vector<int>> images) {
    const long long total = (long long)(images.size());
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return total - (long long)(images.size());
}

}  // namespace

HomReport verify_homomorphism(const Graph& src, const Graph& dst, const VertexMap& m) {
    check_coverage(src, m);
    std::vector<int> idx(m.images.size());
    for (std::size_t i = 0; i < m.images.size(); ++i) {
        idx[i] = dst.index_of(m.images[i]);
        if (idx[i] < 0) fail(errc::ImageNotVertex, payload_str(m.images[i]) + " is not a target vertex");
    }
    HomReport rep;
    rep.collisions = count_collisions(m.images);
    rep.edges_checked = src.edge_count();
    for (std::size_t e = 0; e < src.edges.size(); ++e) {
        const auto [u, v] = src.edges[e];
        const int iu = idx[std::size_t(u)], iv = idx[std::size_t(v)];
        if (iu == iv)
            rep.violations.push_back({(long long)(e), u, v, "edge collapses to a single vertex"});
        else if (!std::binary_search(dst.edges.begin(), dst.edges.end(),
                                     std::make_pair(std::min(iu, iv), std::max(iu, iv))))
            rep.violations.push_back({(long long)(e), u, v, "image pair is not an edge"});
    }
    return rep;
}

HomReport verify_homomorphism(const Graph& src, const TargetView& dst, const VertexMap& m) {
    check_coverage(src, m);
    for (const auto& img : m.images)
        if (!dst.is_vertex(img)) fail(errc::ImageNotVertex, payload_str(img) + " is not a target vertex");
    HomReport rep;
    rep.collisions = count_collisions(m.images);
    rep.edges_checked = src.edge_count();
    for (std::size_t e = 0; e < src.edges.size(); ++e) {
        const auto [u, v] = src.edges[e];
        const auto& a = m.images[std::size_t(u)];
        const auto& bb = m.images[std::size_t(v)];
        if (a == bb)
            rep.violations.push_back({(long long)(e), u, v, "edge collapses to a single vertex"});
        else if (!dst.adjacent(a, bb))
            rep.violations.push_back({(long long)(e), u, v, "image pair is not an edge"});
    }
    return rep;
}

std::string hom_report_json(const HomReport& r) {
    nlohmann::json j;
    auto& vio = j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations)
        vio.push_back({{"edge", v.edge_index}, {"u", v.u}, {"v", v.v}, {"reason", v.reason}});
    j["collisions"] = r.collisions;
    j["edges_checked"] = r.edges_checked;
    return j.dump();
}

}  // namespace tg
