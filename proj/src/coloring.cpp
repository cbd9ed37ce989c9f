#include "tg/coloring.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"
#include "tg/dyadic.hpp"
#include "tg/homomorphism.hpp"

namespace tg {

int ceil_log2(int n) {
    if (n < 1) fail(errc::BadRange, "need n >= 1");
    return std::bit_width(static_cast<unsigned>(n - 1));
}

std::string ColorToken::str() const {
    switch (kind) {
        case Kind::clique:
            return "clique(" + std::to_string(value) + ")";
        case Kind::g2_base:
            return "G2(base)";
        case Kind::g2_fresh:
            return "G2(level=" + std::to_string(value) + "," + cls + ")";
        case Kind::gb_A: {
            std::string bits;
            for (int i = 0; i < sigbits; ++i) bits += (signature >> i) & 1u ? '1' : '0';
            return "A(sig=" + bits + ",sub=" + (sub ? sub->str() : std::string("sentinel")) + ")";
        }
        case Kind::gb_B:
            return "B(" + std::to_string(value) + ")";
        case Kind::gb_C:
            return "C(mirror=" + (sub ? sub->str() : std::string("?")) + ")";
        case Kind::shift_level:
            return "f=" + std::to_string(value);
        case Kind::pipeline:
            return "pipeline(" + (sub ? sub->str() : std::string("?")) + ")";
    }
    return "?";
}

ColorToken color_G1(const std::vector<int>& x) {
    if (x.size() != 1) fail(errc::DimensionMismatch, "level-1 vertices are single elements");
    ColorToken t;
    t.kind = ColorToken::Kind::clique;
    t.value = x[0];
    return t;
}

ColorToken color_G2(const std::vector<int>& x, int k) {
    if (k < 0 || k > 30) fail(errc::BadRange, "exponent " + std::to_string(k) + " out of range");
    if (!gb_vertex_ok(2, 1 << k, x))
        fail(errc::BadRange, "not a level-2 vertex over [2^" + std::to_string(k) + "]");
    int a = x[0], y = x[1], z = x[2];
    for (int lvl = k; lvl > 1; --lvl) {
        const int m = 1 << (lvl - 1);
        if (z <= m) continue;  // lower half: descend
        if (a > m) {           // upper half: shift into the shared sub-palette
            a -= m;
            y -= m;
            z -= m;
            continue;
        }
        ColorToken t;
        t.kind = ColorToken::Kind::g2_fresh;
        t.value = lvl;
        t.cls = y <= m ? 'B' : 'C';  // B: y <= m < z;  C: a <= m < y
        return t;
    }
    ColorToken t;
    t.kind = ColorToken::Kind::g2_base;
    return t;
}

std::vector<int> class_signature(int b, const std::vector<int>& x) {
    if (b < 3 || int(x.size()) != 2 * b - 1)
        fail(errc::DimensionMismatch, "need a level-b tuple with b >= 3");
    std::vector<int> bits;
    bits.reserve(std::size_t(2 * b - 4));
    for (int i = 3; i <= 2 * b - 2; ++i) {
        const int fi = dyadic_split(x[0], x[std::size_t(i) - 1]).f;
        const int fn = dyadic_split(x[0], x[std::size_t(i)]).f;
        bits.push_back(fi == fn ? 1 : 0);
    }
    return bits;
}

namespace {

// f-image of a low-class vertex: (f(x_1,x_3), f(x_1,x_4), ..., f(x_1,x_{2b-1})).
std::vector<int> f_image(int b, const std::vector<int>& x) {
    std::vector<int> img;
    img.reserve(std::size_t(2 * b - 3));
    for (int i = 3; i <= 2 * b - 1; ++i) img.push_back(dyadic_split(x[0], x[std::size_t(i) - 1]).f);
    return img;
}

ColorToken sub_color(int level, int e, const std::vector<int>& img) {
    return level == 2 ? color_G2(img, e) : color_Gb(level, e, img);
}

// Token for a vertex already known to satisfy x_{2b-3} <= T.
ColorToken a_token(int b, int n, const std::vector<int>& x) {
    ColorToken t;
    t.kind = ColorToken::Kind::gb_A;
    t.sigbits = 2 * b - 4;
    const auto bits = class_signature(b, x);
    for (std::size_t i = 0; i < bits.size(); ++i) t.signature |= unsigned(bits[i]) << i;
    const auto img = f_image(b, x);
    const int e = sub_exponent(b, n);
    if (gb_vertex_ok(b - 1, 1 << e, img))
        t.sub = std::make_shared<const ColorToken>(sub_color(b - 1, e, img));
    return t;  // null sub = sentinel
}

enum class GbClass { A, B, C };

GbClass classify(int b, long long T, const std::vector<int>& x, int& bindex) {
    const int L = 2 * b - 1;
    const bool inA = x[std::size_t(L) - 3] <= T;  // x_{2b-3}
    const bool inC = T < x[2];                    // x_3
    int hits = 0;
    bindex = 0;
    for (int i = 3; i <= 2 * b - 4; ++i)
        if (x[std::size_t(i) - 1] <= T && T < x[std::size_t(i)]) {
            ++hits;
            bindex = i;
        }
    if (int(inA) + int(inC) + hits != 1)
        fail(errc::BadRange, "split-point classification must hit exactly one class");
    return inA ? GbClass::A : inC ? GbClass::C : GbClass::B;
}

}  // namespace

ColorToken color_Gb(int b, int n, const std::vector<int>& x) {
    if (b < 3) fail(errc::BadRange, "recursion needs b >= 3");
    if (n < b || n > 30) fail(errc::BadRange, "need b <= n <= 30");
    if (!gb_vertex_ok(b, 1 << n, x))
        fail(errc::BadRange, "not a level-" + std::to_string(b) + " vertex over [2^" + std::to_string(n) + "]");
    const long long T = dyadic_split(x.front(), x.back()).T;
    int bindex = 0;
    switch (classify(b, T, x, bindex)) {
        case GbClass::A:
            return a_token(b, n, x);
        case GbClass::B: {
            ColorToken t;
            t.kind = ColorToken::Kind::gb_B;
            t.value = bindex;
            return t;
        }
        case GbClass::C: {
            const auto mirror = eta(b, n, x);
            const long long Tm = dyadic_split(mirror.front(), mirror.back()).T;
            int dummy = 0;
            if (classify(b, Tm, mirror, dummy) != GbClass::A)
                fail(errc::BadRange, "reflection of a high-class vertex must land in the low class");
            ColorToken t;
            t.kind = ColorToken::Kind::gb_C;
            t.sub = std::make_shared<const ColorToken>(a_token(b, n, mirror));
            return t;
        }
    }
    fail(errc::BadRange, "unreachable");
}

int sub_exponent(int b, int n) {
    return std::max(ceil_log2(n), b - 1 >= 3 ? b - 1 : 1);
}

long long g2_palette(int k) {
    if (k < 1) fail(errc::BadRange, "palette needs exponent >= 1");
    return 2LL * k - 1;
}

long long gb_palette(int b, int n) {
    if (b < 3) fail(errc::BadRange, "recursion needs b >= 3");
    const int e = sub_exponent(b, n);
    const long long sub = b - 1 == 2 ? g2_palette(e) : gb_palette(b - 1, e);
    return (2LL * b - 6) + (1LL << (2 * b - 3)) * sub;
}

int flatten_g2(const ColorToken& t) {
    if (t.kind == ColorToken::Kind::g2_base) return 0;
    if (t.kind == ColorToken::Kind::g2_fresh)
        return 2 * (t.value - 2) + (t.cls == 'B' ? 1 : 2);
    fail(errc::BadRange, "not a level-2 token: " + t.str());
}

long long flatten_gb(const ColorToken& t, int b, int n) {
    const int e = sub_exponent(b, n);
    const long long psub = b - 1 == 2 ? g2_palette(e) : gb_palette(b - 1, e);
    switch (t.kind) {
        case ColorToken::Kind::gb_B:
            return t.value - 3;
        case ColorToken::Kind::gb_A: {
            const long long sub =
                !t.sub ? 0 : (b - 1 == 2 ? flatten_g2(*t.sub) : flatten_gb(*t.sub, b - 1, e));
            return (2LL * b - 6) + (long long)(t.signature) * psub + sub;
        }
        case ColorToken::Kind::gb_C: {
            const long long mirrored = flatten_gb(*t.sub, b, n) - (2LL * b - 6);
            return (2LL * b - 6) + (1LL << (2 * b - 4)) * psub + mirrored;
        }
        default:
            fail(errc::BadRange, "not a level-b token: " + t.str());
    }
}

namespace {

void finalize(Coloring& c) {
    auto sorted = c.colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    c.colors_used = (long long)(sorted.size());
}

}  // namespace

Coloring color_gb_graph(int b, int n) {
    if (b < 1 || n < 1) fail(errc::BadRange, "need b >= 1 and n >= 1");
    Coloring c;
    c.graph_desc = "auxiliary b=" + std::to_string(b) + " n=" + std::to_string(n);
    const auto vertices = gb_vertices(b, n);
    c.tokens.reserve(vertices.size());
    c.colors.reserve(vertices.size());
    if (b == 1) {
        c.legend = "one colour per element";
        c.palette_bound = n;
        for (const auto& x : vertices) {
            c.tokens.push_back(std::make_shared<const ColorToken>(color_G1(x)));
            c.colors.push_back(x[0] - 1);
        }
    } else if (b == 2) {
        const int k = ceil_log2(n);
        c.legend = "halving recursion over [2^" + std::to_string(k) + "]";
        c.palette_bound = vertices.empty() ? 0 : g2_palette(std::max(k, 1));
        for (const auto& x : vertices) {
            auto t = std::make_shared<const ColorToken>(color_G2(x, std::max(k, 1)));
            c.colors.push_back(flatten_g2(*t));
            c.tokens.push_back(std::move(t));
        }
    } else {
        const int e = std::max(ceil_log2(n), b);
        c.legend = "split-point recursion over [2^" + std::to_string(e) + "]";
        c.palette_bound = gb_palette(b, e);
        for (const auto& x : vertices) {
            auto t = std::make_shared<const ColorToken>(color_Gb(b, e, x));
            c.colors.push_back(flatten_gb(*t, b, e));
            c.tokens.push_back(std::move(t));
        }
    }
    finalize(c);
    return c;
}

namespace {

// Scheme behind an irreducible nontrivial type: the clique map for two
// blocks, otherwise the boundary-element map into the level-(b-1) scheme.
struct IrreducibleScheme {
    OrderType prim;    // primary representative
    int b = 0;         // block count
    int e = 0;         // exponent of the padded sub-universe (b >= 3)
    long long palette = 0;
    std::string legend;
};

IrreducibleScheme irreducible_scheme(int n, const OrderType& rho) {
    IrreducibleScheme s;
    s.prim = block_decompose(rho).polarity == Polarity::secondary ? dual(rho) : rho;
    s.b = block_decompose(s.prim).b();
    if (s.b == 2) {
        s.palette = n;
        s.legend = "clique colouring by first elements";
    } else if (s.b == 3) {
        s.e = std::max(ceil_log2(n), 1);
        s.palette = g2_palette(s.e);
        s.legend = "boundary elements, halving recursion over [2^" + std::to_string(s.e) + "]";
    } else {
        s.e = std::max(ceil_log2(n), s.b - 1);
        s.palette = gb_palette(s.b - 1, s.e);
        s.legend = "boundary elements, split-point recursion over [2^" + std::to_string(s.e) + "]";
    }
    return s;
}

std::pair<TokenPtr, long long> irreducible_color(const IrreducibleScheme& s, const std::vector<int>& X) {
    ColorToken inner;
    long long flat = 0;
    if (s.b == 2) {
        inner.kind = ColorToken::Kind::clique;
        inner.value = X[0];
        flat = X[0] - 1;
    } else {
        const auto img = hom_upper(s.prim, X);
        if (s.b == 3) {
            inner = color_G2(img, s.e);
            flat = flatten_g2(inner);
        } else {
            inner = color_Gb(s.b - 1, s.e, img);
            flat = flatten_gb(inner, s.b - 1, s.e);
        }
    }
    ColorToken wrapped;
    wrapped.kind = ColorToken::Kind::pipeline;
    wrapped.sub = std::make_shared<const ColorToken>(std::move(inner));
    return {std::make_shared<const ColorToken>(std::move(wrapped)), flat};
}

}  // namespace

Coloring color_typegraph(int n, const OrderType& tau) {
    if (tau.trivial())
        fail(errc::TrivialType, "type " + (tau.length() ? tau.str() : std::string("(empty)")));
    const int k = tau.width();
    if (n < k) fail(errc::TooSmall, "n=" + std::to_string(n) + " below width " + std::to_string(k));

    // reducible types are coloured through the factor with the most blocks
    int istar = 0;
    OrderType rho = tau;
    if (!is_irreducible(tau)) {
        const auto factors = factorize(tau);
        int best = 0;
        for (int i = 1; i <= int(factors.size()); ++i) {
            const int bi = block_decompose(factors[std::size_t(i) - 1]).b();
            if (bi > best) {
                best = bi;
                istar = i;
            }
        }
        rho = factors[std::size_t(istar) - 1];
    }
    const IrreducibleScheme s = irreducible_scheme(n, rho);

    Coloring c;
    c.graph_desc = "typegraph n=" + std::to_string(n) + " type=" + tau.str();
    c.palette_bound = s.palette;
    c.legend = istar ? "factor " + std::to_string(istar) + " (" + rho.str() + "): " + s.legend
                     : s.legend;
    const auto vertices = k_subsets(n, k);
    c.tokens.reserve(vertices.size());
    c.colors.reserve(vertices.size());
    for (const auto& X : vertices) {
        const auto [tok, flat] =
            irreducible_color(s, istar ? hom_project(tau, istar, X) : X);
        c.tokens.push_back(tok);
        c.colors.push_back(flat);
    }
    finalize(c);
    return c;
}

Coloring shift_pair_coloring(int n) {
    if (n < 2) fail(errc::TooSmall, "need n >= 2");
    Coloring c;
    c.graph_desc = "typegraph n=" + std::to_string(n) + " type=132";
    c.palette_bound = ceil_log2(n);
    c.legend = "dyadic level of the pair";
    for (const auto& X : k_subsets(n, 2)) {
        ColorToken t;
        t.kind = ColorToken::Kind::shift_level;
        t.value = dyadic_split(X[0], X[1]).f;
        c.colors.push_back(t.value - 1);
        c.tokens.push_back(std::make_shared<const ColorToken>(std::move(t)));
    }
    finalize(c);
    return c;
}

ProperReport verify_proper(const Graph& g, const Coloring& c) {
    if ((long long)(c.colors.size()) != g.vertex_count())
        fail(errc::CoverageGap, "colouring covers " + std::to_string(c.colors.size()) +
                                    " of " + std::to_string(g.vertex_count()) + " vertices");
    ProperReport rep;
    rep.colors_used = c.colors_used;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        if (c.colors[std::size_t(u)] == c.colors[std::size_t(v)])
            rep.monochromatic.push_back({(long long)(e), u, v});
    }
    return rep;
}

std::string coloring_json(const Coloring& c) {
    nlohmann::json j;
    j["graph"] = c.graph_desc;
    j["colors"] = c.colors;
    j["palette_size"] = c.palette_bound;
    j["colors_used"] = c.colors_used;
    j["token_legend"] = c.legend;
    return j.dump();
}

}  // namespace tg
