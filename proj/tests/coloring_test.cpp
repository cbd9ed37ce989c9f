#include "tg/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "json.hpp"
#include "tg/dyadic.hpp"
#include "tg/homomorphism.hpp"

using namespace tg;

namespace {

Coloring restrict_to(const Graph& g, const Coloring& full, const std::vector<std::vector<int>>& all) {
    // pick out the colours of g's vertices from a colouring enumerated over `all`
    Coloring c;
    c.graph_desc = g.describe();
    c.palette_bound = full.palette_bound;
    c.colors_used = full.colors_used;
    for (const auto& v : g.vertices) {
        const auto it = std::lower_bound(all.begin(), all.end(), v);
        const auto idx = std::size_t(it - all.begin());
        c.tokens.push_back(full.tokens[idx]);
        c.colors.push_back(full.colors[idx]);
    }
    return c;
}

}  // namespace

TEST_CASE("level-1 colouring is the identity on elements") {
    CHECK(color_G1({7}).value == 7);
    CHECK(color_G1({7}).kind == ColorToken::Kind::clique);
    CHECK_THROWS_AS(color_G1({1, 2}), error);

    const Coloring c = color_gb_graph(1, 5);
    CHECK(c.palette_bound == 5);
    CHECK(c.colors_used == 5);
    CHECK(c.colors == std::vector<long long>{0, 1, 2, 3, 4});
    const ProperReport rep = verify_proper(build_Gb(1, 5), c);
    CHECK(rep.ok());
}

TEST_CASE("halving recursion stays within its palette and is proper") {
    // both vertices over [2] share the floor colour
    CHECK(color_G2({1, 1, 2}, 1).kind == ColorToken::Kind::g2_base);
    CHECK(color_G2({1, 2, 2}, 1).kind == ColorToken::Kind::g2_base);

    // (1,3,4) over [4] straddles the split with its first element below
    const ColorToken t = color_G2({1, 3, 4}, 2);
    CHECK(t.kind == ColorToken::Kind::g2_fresh);
    CHECK(t.cls == 'C');
    CHECK(t.value == 2);
    CHECK(flatten_g2(t) == 2);

    for (int k = 1; k <= 4; ++k) {
        const Coloring c = color_gb_graph(2, 1 << k);
        CHECK(c.palette_bound == 2 * k - 1);
        CHECK(c.colors_used <= 2 * k - 1);
        for (long long col : c.colors) {
            CHECK(col >= 0);
            CHECK(col < c.palette_bound);
        }
        const ProperReport rep = verify_proper(build_Gb(2, 1 << k), c);
        CAPTURE(k);
        CHECK(rep.ok());
    }

    CHECK_THROWS_AS(color_G2({1, 3, 4}, 1), error);   // 4 outside [2]
    CHECK_THROWS_AS(color_G2({2, 1, 3}, 2), error);   // not a vertex
    CHECK_THROWS_AS(color_G2({1, 1, 2}, 40), error);  // exponent out of range
}

TEST_CASE("both halves of the halving recursion share one sub-palette") {
    for (int k = 2; k <= 4; ++k) {
        const int m = 1 << (k - 1);
        for (const auto& x : gb_vertices(2, m)) {
            const std::vector<int> shifted = {x[0] + m, x[1] + m, x[2] + m};
            CHECK(flatten_g2(color_G2(x, k)) == flatten_g2(color_G2(shifted, k)));
        }
    }
}

TEST_CASE("non-power-of-two ground sets are padded, not rejected") {
    for (int n : {3, 5, 6, 7, 12}) {
        const Coloring c = color_gb_graph(2, n);
        CHECK(c.palette_bound == 2 * ceil_log2(n) - 1);
        const ProperReport rep = verify_proper(build_Gb(2, n), c);
        CAPTURE(n);
        CHECK(rep.ok());
    }
}

TEST_CASE("signature bits record equal dyadic levels of consecutive coordinates") {
    CHECK(class_signature(3, {1, 1, 2, 2, 4}) == std::vector<int>{1, 0});
    CHECK(class_signature(3, {1, 1, 2, 2, 4}).size() == 2);
    CHECK_THROWS_AS(class_signature(3, {1, 2, 3}), error);
    CHECK_THROWS_AS(class_signature(2, {1, 2, 3}), error);

    gen::Rng rng(7);
    const auto vs = gb_vertices(3, 16);
    for (int round = 0; round < 200; ++round) {
        const auto& x = vs[std::size_t(gen::pick(rng, 0, int(vs.size()) - 1))];
        const auto bits = class_signature(3, x);
        CHECK(bits.size() == 2);
        if (x[2] == x[3]) CHECK(bits[0] == 1);  // equal coordinates force equal levels
        for (int bit : bits) CHECK((bit == 0 || bit == 1));
    }
}

TEST_CASE("split-point recursion colours the smallest level-3 universe properly") {
    const Coloring c = color_gb_graph(3, 8);
    CHECK(c.palette_bound == 24);  // 0 + 2^3 * (2*2-1) with the padded sub-exponent
    CHECK(c.colors_used <= 24);
    for (long long col : c.colors) {
        CHECK(col >= 0);
        CHECK(col < c.palette_bound);
    }
    const Graph g = build_Gb(3, 8);
    const ProperReport rep = verify_proper(g, c);
    CHECK(rep.ok());

    // with three levels there is no middle class, only low and high
    int a = 0, cc = 0;
    for (const auto& t : c.tokens) {
        CHECK(t->kind != ColorToken::Kind::gb_B);
        a += t->kind == ColorToken::Kind::gb_A;
        cc += t->kind == ColorToken::Kind::gb_C;
    }
    CHECK(a == cc);  // the reflection swaps the two classes
    CHECK(a + cc == int(c.tokens.size()));

    CHECK_THROWS_AS(color_Gb(2, 4, {1, 2, 3}), error);
    CHECK_THROWS_AS(color_Gb(3, 2, {1, 1, 2, 2, 4}), error);
    CHECK_THROWS_AS(color_Gb(3, 3, {9, 9, 9, 9, 9}), error);
}

TEST_CASE("high-class colours live in their own band above the low-class band") {
    const int b = 3, n = 3;
    const long long psub = g2_palette(sub_exponent(b, n));
    for (const auto& x : gb_vertices(3, 8)) {
        const ColorToken t = color_Gb(b, n, x);
        const long long flat = flatten_gb(t, b, n);
        if (t.kind == ColorToken::Kind::gb_A) {
            CHECK(flat >= 0);
            CHECK(flat < (1LL << (2 * b - 4)) * psub);
        } else if (t.kind == ColorToken::Kind::gb_C) {
            CHECK(flat >= (1LL << (2 * b - 4)) * psub);
            CHECK(flat < (1LL << (2 * b - 3)) * psub);
        }
    }
}

TEST_CASE("low-class edges respect the f-image homomorphism, sentinels are isolated") {
    const int b = 3, n = 3;
    // bucket the low class by signature
    std::map<unsigned, std::vector<std::vector<int>>> by_sig;
    for (const auto& x : gb_vertices(3, 8)) {
        const ColorToken t = color_Gb(b, n, x);
        if (t.kind == ColorToken::Kind::gb_A) by_sig[t.signature].push_back(x);
    }
    auto f_image = [](const std::vector<int>& x) {
        std::vector<int> img;
        for (int i = 3; i <= 5; ++i) img.push_back(dyadic_split(x[0], x[std::size_t(i) - 1]).f);
        return img;
    };
    long long edges_seen = 0;
    for (const auto& [sig, cls] : by_sig) {
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (!adjacent_Gb(cls[i], cls[j])) continue;
                ++edges_seen;
                const auto iu = f_image(cls[i]);
                const auto iv = f_image(cls[j]);
                // neither endpoint of an intra-class edge may be a sentinel
                CHECK(gb_vertex_ok(2, n, iu));
                CHECK(gb_vertex_ok(2, n, iv));
                CHECK(adjacent_Gb(iu, iv));
            }
    }
    CHECK(edges_seen > 0);  // the invariant is not vacuous
}

TEST_CASE("middle classes of the four-level recursion are independent sets") {
    std::vector<std::vector<int>> bands[2];
    for (const auto& x : gb_vertices(4, 16)) {
        const ColorToken t = color_Gb(4, 4, x);
        if (t.kind == ColorToken::Kind::gb_B) {
            CHECK((t.value == 3 || t.value == 4));
            bands[t.value - 3].push_back(x);
        }
    }
    CHECK(!bands[0].empty());
    CHECK(!bands[1].empty());
    for (const auto& cls : bands)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (adjacent_Gb(cls[i], cls[j])) {
                    CAPTURE(i);
                    CAPTURE(j);
                    REQUIRE(false);
                }
}

TEST_CASE("four-level palette matches the recursion formula") {
    CHECK(gb_palette(3, 3) == 24);
    CHECK(gb_palette(3, 4) == 24);                     // ceil(log 4) = 2, same sub-palette
    CHECK(gb_palette(4, 4) == 2 + 32 * gb_palette(3, 3));
    CHECK(sub_exponent(3, 8) == 3);
    CHECK(sub_exponent(4, 4) == 3);
    CHECK(sub_exponent(4, 16) == 4);

    // every flattened colour of the four-level scheme is inside its palette
    std::set<long long> seen;
    for (const auto& x : gb_vertices(4, 16)) {
        const long long flat = flatten_gb(color_Gb(4, 4, x), 4, 4);
        CHECK(flat >= 0);
        CHECK(flat < gb_palette(4, 4));
        seen.insert(flat);
    }
    CHECK((long long)(seen.size()) <= gb_palette(4, 4));
}

TEST_CASE("type-graph colouring: cliques for two blocks") {
    const Coloring c = color_typegraph(6, parse_type("12"));
    CHECK(c.palette_bound == 6);
    CHECK(c.colors_used == 6);
    for (std::size_t i = 0; i < c.colors.size(); ++i) CHECK(c.colors[i] == i);
    CHECK(verify_proper(build_typegraph(6, parse_type("12")), c).ok());

    const Coloring w = color_typegraph(6, parse_type("1122"));
    CHECK(w.palette_bound == 6);
    CHECK(verify_proper(build_typegraph(6, parse_type("1122")), w).ok());
    CHECK(w.tokens[0]->kind == ColorToken::Kind::pipeline);
    CHECK(w.tokens[0]->sub->kind == ColorToken::Kind::clique);
}

TEST_CASE("type-graph colouring: three blocks ride the halving recursion") {
    for (int n = 2; n <= 16; ++n) {
        const Coloring c = color_typegraph(n, parse_type("132"));
        CHECK(c.palette_bound == 2 * std::max(ceil_log2(n), 1) - 1);
        const ProperReport rep = verify_proper(build_typegraph(n, parse_type("132")), c);
        CAPTURE(n);
        CHECK(rep.ok());
    }
    // the documented bound at n = 16: at most 7 colours
    CHECK(color_typegraph(16, parse_type("132")).colors_used <= 7);
}

TEST_CASE("type-graph colouring handles every catalogue type properly") {
    for (const char* s : {"12", "1122", "111222", "132", "1332", "13332", "13122", "112122",
                          "231", "1212", "12132", "312"}) {
        const OrderType t = parse_type(s);
        for (int n = t.width(); n <= 8; ++n) {
            const Coloring c = color_typegraph(n, t);
            CHECK(c.colors_used <= c.palette_bound);
            const ProperReport rep = verify_proper(build_typegraph(n, t), c);
            CAPTURE(s);
            CAPTURE(n);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("reducible types are coloured through their widest factor") {
    const Coloring c = color_typegraph(6, parse_type("12132"));
    CHECK(c.legend.find("factor 2") != std::string::npos);
    CHECK(c.legend.find("132") != std::string::npos);
    // same palette as colouring the factor directly
    CHECK(c.palette_bound == color_typegraph(6, parse_type("132")).palette_bound);

    // a secondary type is coloured exactly like its dual
    const Coloring sec = color_typegraph(7, parse_type("231"));
    const Coloring pri = color_typegraph(7, parse_type("132"));
    CHECK(sec.colors == pri.colors);
}

TEST_CASE("type-graph colouring rejects trivial types and undersized grounds") {
    CHECK_THROWS_AS(color_typegraph(5, parse_type("3")), error);
    CHECK_THROWS_AS(color_typegraph(1, parse_type("132")), error);
    try {
        color_typegraph(5, parse_type("33"));
    } catch (const error& e) {
        CHECK(e.code() == errc::TrivialType);
    }
    try {
        color_typegraph(3, parse_type("13332"));
    } catch (const error& e) {
        CHECK(e.code() == errc::TooSmall);
    }
}

TEST_CASE("random nontrivial types are coloured properly within their palettes") {
    gen::Rng rng(20260816);
    int rounds = 0;
    while (rounds < 25) {
        const OrderType t = gen::random_type(rng, 4, 2);
        if (t.trivial() || !t.is_type()) continue;
        ++rounds;
        const int n = t.width() + gen::pick(rng, 0, 2);
        const Coloring c = color_typegraph(n, t);
        CHECK(c.colors_used <= c.palette_bound);
        for (long long col : c.colors) {
            CHECK(col >= 0);
            CHECK(col < c.palette_bound);
        }
        const ProperReport rep = verify_proper(build_typegraph(n, t), c);
        CAPTURE(t.str());
        CAPTURE(n);
        CHECK(rep.ok());
    }
}

TEST_CASE("direct pair colouring uses exactly the dyadic levels") {
    for (int n = 2; n <= 33; ++n) {
        const Coloring c = shift_pair_coloring(n);
        CHECK(c.palette_bound == ceil_log2(n));
        CHECK(c.colors_used == ceil_log2(n));
        const ProperReport rep = verify_proper(build_typegraph(n, parse_type("132")), c);
        CAPTURE(n);
        CHECK(rep.ok());
    }
    CHECK_THROWS_AS(shift_pair_coloring(1), error);
}

TEST_CASE("properness reports name the offending edges") {
    const Graph k3 = build_typegraph(3, parse_type("12"));
    Coloring good;
    good.colors = {0, 1, 2};
    good.colors_used = 3;
    CHECK(verify_proper(k3, good).ok());

    Coloring bad;
    bad.colors = {0, 1, 1};
    bad.colors_used = 2;
    const ProperReport rep = verify_proper(k3, bad);
    CHECK(rep.monochromatic.size() == 1);
    CHECK(rep.monochromatic[0].u == 1);
    CHECK(rep.monochromatic[0].v == 2);

    Coloring gap;
    gap.colors = {0, 1};
    CHECK_THROWS_AS(verify_proper(k3, gap), error);
    try {
        verify_proper(k3, gap);
    } catch (const error& e) {
        CHECK(e.code() == errc::CoverageGap);
    }
}

TEST_CASE("colourings serialise with their legends") {
    const auto j = nlohmann::json::parse(coloring_json(color_typegraph(5, parse_type("132"))));
    CHECK(j["graph"] == "typegraph n=5 type=132");
    CHECK(j["colors"].size() == 10);
    CHECK(j["palette_size"] == 5);
    CHECK(j.contains("token_legend"));
    CHECK(j.contains("colors_used"));
}

TEST_CASE("restricting a padded colouring to a smaller ground set stays proper") {
    // the induced-subgraph property the padding relies on
    const auto all = gb_vertices(2, 16);
    const Coloring full = color_gb_graph(2, 16);
    for (int n : {9, 11, 13}) {
        const Graph g = build_Gb(2, n);
        const ProperReport rep = verify_proper(g, restrict_to(g, full, all));
        CAPTURE(n);
        CHECK(rep.ok());
    }
}
