#include "tg/homomorphism.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "json.hpp"
#include "tg/realization.hpp"

using namespace tg;

namespace {

const std::vector<const char*> kIrreducibles = {"12",    "1122",  "111222", "132", "1332",
                                                "13332", "13122", "112122", "231"};
const std::vector<const char*> kReducibles = {"1212", "12132", "312"};

VertexMap upper_map(const Graph& g, const OrderType& tau) {
    VertexMap m;
    m.source_desc = g.describe();
    m.source_vertices = g.vertices;
    for (const auto& X : g.vertices) m.images.push_back(hom_upper(tau, X));
    return m;
}

}  // namespace

TEST_CASE("scaffolding sets reproduce the blocks they were built from") {
    const auto r12 = build_R_sets(block_decompose(parse_type("12")));
    CHECK(r12 == std::vector<std::vector<int>>{{}, {1}, {}});
    const auto r1122 = build_R_sets(block_decompose(parse_type("1122")));
    CHECK(r1122[1] == std::vector<int>{1, 2});

    gen::Rng rng(81);
    auto check_roundtrip = [](const OrderType& t) {
        const auto dec = block_decompose(t);
        const auto star = build_R_sets(dec);
        CHECK(int(star.size()) == dec.b() + 1);
        CHECK(star.front().empty());
        CHECK(star.back().empty());
        std::size_t total = 0;
        for (int i = 1; i <= dec.b(); ++i) {
            CHECK(order_type_of(star[std::size_t(i)], star[std::size_t(i) - 1]) ==
                  dec.blocks[std::size_t(i) - 1]);
            total += star[std::size_t(i) - 1].size();
        }
        CHECK(int(total) == t.width());
    };
    for (const char* s : kIrreducibles) {
        const OrderType t = parse_type(s);
        check_roundtrip(block_decompose(t).polarity == Polarity::secondary ? dual(t) : t);
    }
    for (int round = 0; round < 200; ++round)
        check_roundtrip(gen::random_irreducible(rng, /*primary_only=*/true));

    CHECK_THROWS_AS(build_R_sets(block_decompose(parse_type("3"))), error);
    try {
        build_R_sets(block_decompose(parse_type("231")));
    } catch (const error& e) {
        CHECK(e.code() == errc::NotIrreducible);
    }
}

TEST_CASE("lower embedding has the documented closed forms") {
    const VertexMap m1122 = hom_lower(parse_type("1122"), 5);
    for (std::size_t i = 0; i < m1122.source_vertices.size(); ++i) {
        const int h = m1122.source_vertices[i][0];
        CHECK(m1122.images[i] == std::vector<int>{2 * h - 1, 2 * h});
    }

    const VertexMap m132 = hom_lower(parse_type("132"), 6);
    for (std::size_t i = 0; i < m132.source_vertices.size(); ++i) {
        const auto& H = m132.source_vertices[i];
        CHECK(m132.images[i] == std::vector<int>{2 * H[0] - 1, 2 * H[1] - 1});
    }
    CHECK(m132.source_desc == "typegraph n=6 type=132");
    CHECK(m132.target_desc == "typegraph n=12 type=132");
    CHECK(hom_lower(parse_type("12"), 4).source_desc == "typegraph n=4 type=12");
}

TEST_CASE("lower embedding maps shift edges onto type edges") {
    for (const char* s : kIrreducibles) {
        const OrderType t = parse_type(s);
        const int b = block_decompose(t).b();
        const int k = t.width();
        for (int n = b; n <= (k <= 3 ? 6 : 5); ++n) {
            const VertexMap m = hom_lower(t, n);
            const Graph src = build_typegraph(n, b == 2 ? parse_type("12") : sigma(b - 1));
            const HomReport rep = verify_homomorphism(src, typegraph_view(k * n, t), m);
            CAPTURE(s);
            CAPTURE(n);
            CHECK(rep.ok());
            CHECK(rep.collisions == 0);
            CHECK(rep.edges_checked == src.edge_count());
        }
    }
    // cross-check the implicit-target overload against a materialised target
    const VertexMap m = hom_lower(parse_type("132"), 5);
    const Graph src = build_typegraph(5, parse_type("132"));
    const Graph dst = build_typegraph(10, parse_type("132"));
    const HomReport a = verify_homomorphism(src, dst, m);
    const HomReport b = verify_homomorphism(src, typegraph_view(10, parse_type("132")), m);
    CHECK(a.ok() == b.ok());
    CHECK(a.collisions == b.collisions);
    CHECK(a.edges_checked == b.edges_checked);
}

TEST_CASE("lower embedding rejects unsuitable inputs") {
    CHECK_THROWS_AS(hom_lower(parse_type("1212"), 6), error);
    CHECK_THROWS_AS(hom_lower(parse_type("3"), 6), error);
    CHECK_THROWS_AS(hom_lower(parse_type("132"), 2), error);
    try {
        hom_lower(parse_type("1212"), 6);
    } catch (const error& e) {
        CHECK(e.code() == errc::Reducible);
    }
    try {
        hom_lower(parse_type("132"), 2);
    } catch (const error& e) {
        CHECK(e.code() == errc::TooSmall);
    }
}

TEST_CASE("upper map lists the block-boundary elements") {
    CHECK(hom_upper(parse_type("132"), {2, 5}) == std::vector<int>{2, 2, 5});
    CHECK(hom_upper(parse_type("12"), {7}) == std::vector<int>{7});
    CHECK(hom_upper(parse_type("1122"), {3, 9}) == std::vector<int>{3});
    // secondary types answer through their dual
    CHECK(hom_upper(parse_type("231"), {2, 5}) == hom_upper(parse_type("132"), {2, 5}));
    CHECK_THROWS_AS(hom_upper(parse_type("132"), {1, 2, 3}), error);
    CHECK_THROWS_AS(hom_upper(parse_type("1212"), {1, 2}), error);
    try {
        hom_upper(parse_type("132"), {4});
    } catch (const error& e) {
        CHECK(e.code() == errc::WidthMismatch);
    }
}

TEST_CASE("upper map lands in the auxiliary vertex set and preserves edges") {
    for (const char* s : kIrreducibles) {
        const OrderType t = parse_type(s);
        const int b = block_decompose(t).b();
        if (b < 2) continue;
        for (int n = t.width(); n <= 8; ++n) {
            const Graph src = build_typegraph(n, t);
            const VertexMap m = upper_map(src, t);
            for (const auto& img : m.images) CHECK(gb_vertex_ok(b - 1, n, img));
            const HomReport rep = verify_homomorphism(src, gb_view(b - 1, n), m);
            CAPTURE(s);
            CAPTURE(n);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("factor projection slices by cumulative factor widths") {
    CHECK(hom_project(parse_type("12132"), 2, {1, 4, 9}) == std::vector<int>{4, 9});
    CHECK(hom_project(parse_type("12132"), 1, {1, 4, 9}) == std::vector<int>{1});
    CHECK(hom_project(parse_type("132"), 1, {3, 7}) == std::vector<int>{3, 7});
    CHECK(hom_project(parse_type("33"), 2, {2, 7}) == std::vector<int>{7});
    CHECK_THROWS_AS(hom_project(parse_type("12132"), 3, {1, 4, 9}), error);
    CHECK_THROWS_AS(hom_project(parse_type("12132"), 0, {1, 4, 9}), error);
    try {
        hom_project(parse_type("12132"), 4, {1, 4, 9});
    } catch (const error& e) {
        CHECK(e.code() == errc::IndexOut);
    }
}

TEST_CASE("factor projection respects edges factor by factor") {
    for (const char* s : kReducibles) {
        const OrderType t = parse_type(s);
        const auto factors = factorize(t);
        for (int n = t.width(); n <= 6; ++n) {
            const Graph g = build_typegraph(n, t);
            for (const auto& [u, v] : g.edges) {
                const auto& X = g.vertices[std::size_t(u)];
                const auto& Y = g.vertices[std::size_t(v)];
                for (int i = 1; i <= int(factors.size()); ++i) {
                    const auto px = hom_project(t, i, X);
                    const auto py = hom_project(t, i, Y);
                    if (factors[std::size_t(i) - 1].trivial())
                        CHECK(px == py);  // shared elements only
                    else
                        CHECK(adjacent_typegraph(factors[std::size_t(i) - 1], px, py));
                }
            }
        }
    }
}

TEST_CASE("composite embedding stitches the per-factor pieces") {
    const int n = 5;
    const VertexMap m312 = hom_reducible(parse_type("312"), n);
    for (std::size_t i = 0; i < m312.source_vertices.size(); ++i) {
        const int h = m312.source_vertices[i][0];
        CHECK(m312.images[i] == std::vector<int>{n, n + h});
    }

    const VertexMap m = hom_reducible(parse_type("12132"), n);
    CHECK(m.source_desc == "typegraph n=5 type=132");
    for (std::size_t i = 0; i < m.source_vertices.size(); ++i) {
        const auto& H = m.source_vertices[i];
        CHECK(m.images[i] == std::vector<int>{H[0], n + 2 * H[0] - 1, n + 2 * H[1] - 1});
    }

    const VertexMap m1212 = hom_reducible(parse_type("1212"), n);
    for (std::size_t i = 0; i < m1212.source_vertices.size(); ++i) {
        const int h = m1212.source_vertices[i][0];
        CHECK(m1212.images[i] == std::vector<int>{h, n + h});
    }

    CHECK_THROWS_AS(hom_reducible(parse_type("33"), 5), error);
    CHECK_THROWS_AS(hom_reducible(parse_type("12132"), 2), error);
}

TEST_CASE("composite embedding preserves edges for reducible catalogue types") {
    for (const char* s : kReducibles) {
        const OrderType t = parse_type(s);
        int bstar = 0;
        for (const auto& f : factorize(t)) bstar = std::max(bstar, block_decompose(f).b());
        const int k = t.width();
        for (int n = bstar; n <= 6; ++n) {
            const VertexMap m = hom_reducible(t, n);
            const Graph src = build_typegraph(n, bstar == 2 ? parse_type("12") : sigma(bstar - 1));
            const HomReport rep = verify_homomorphism(src, typegraph_view(k * n, t), m);
            CAPTURE(s);
            CAPTURE(n);
            CHECK(rep.ok());
            for (const auto& img : m.images) CHECK(int(img.size()) == k);
        }
    }
}

TEST_CASE("verification flags collapses, non-edges, and foreign vertices") {
    const Graph k3 = build_typegraph(3, parse_type("12"));
    VertexMap ident;
    ident.source_vertices = k3.vertices;
    ident.images = k3.vertices;
    const HomReport ok = verify_homomorphism(k3, k3, ident);
    CHECK(ok.ok());
    CHECK(ok.collisions == 0);
    CHECK(ok.edges_checked == 3);

    VertexMap constant;
    constant.source_vertices = k3.vertices;
    constant.images.assign(3, {1});
    const HomReport bad = verify_homomorphism(k3, k3, constant);
    CHECK(bad.violations.size() == 3);
    CHECK(bad.collisions == 2);
    CHECK(bad.violations[0].reason == "edge collapses to a single vertex");

    VertexMap foreign;
    foreign.source_vertices = k3.vertices;
    foreign.images = {{1}, {2}, {9}};
    CHECK_THROWS_AS(verify_homomorphism(k3, k3, foreign), error);
    try {
        verify_homomorphism(k3, k3, foreign);
    } catch (const error& e) {
        CHECK(e.code() == errc::ImageNotVertex);
    }

    VertexMap undersized;
    undersized.source_vertices = {{1}, {2}};
    undersized.images = {{1}, {2}};
    try {
        verify_homomorphism(k3, k3, undersized);
    } catch (const error& e) {
        CHECK(e.code() == errc::CoverageGap);
    }

    // a map that lands on vertices but misses edges
    const Graph path_src = build_typegraph(4, parse_type("132"));  // has edges
    VertexMap shuffled;
    shuffled.source_vertices = path_src.vertices;
    shuffled.images.assign(path_src.vertices.size(), std::vector<int>());
    for (std::size_t i = 0; i < path_src.vertices.size(); ++i)
        shuffled.images[i] = path_src.vertices[(i + 1) % path_src.vertices.size()];
    const HomReport rep = verify_homomorphism(path_src, path_src, shuffled);
    for (const auto& v : rep.violations) CHECK(v.reason == "image pair is not an edge");
}

TEST_CASE("verification reports serialise to JSON") {
    const Graph k3 = build_typegraph(3, parse_type("12"));
    VertexMap constant;
    constant.source_vertices = k3.vertices;
    constant.images.assign(3, {2});
    const auto j = nlohmann::json::parse(hom_report_json(verify_homomorphism(k3, k3, constant)));
    CHECK(j["violations"].size() == 3);
    CHECK(j["collisions"] == 2);
    CHECK(j["edges_checked"] == 3);
    CHECK(j["violations"][0].contains("edge"));
    CHECK(j["violations"][0].contains("reason"));
}
