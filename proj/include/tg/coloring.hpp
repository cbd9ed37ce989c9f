#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tg/error.hpp"
#include "tg/graph.hpp"
#include "tg/order_type.hpp"

namespace tg {

struct ColorToken;
using TokenPtr = std::shared_ptr<const ColorToken>;

// Structured colour: records which part of which scheme produced it so a
// flattened palette can be audited class by class.
struct ColorToken {
    enum class Kind {
        clique,       // value = the distinguishing element
        g2_base,      // shared floor colour of the halving recursion
        g2_fresh,     // value = remaining exponent when assigned, cls = 'B' or 'C'
        gb_A,         // signature (sigbits wide, lsb first) + sub-colour (null = sentinel)
        gb_B,         // value = the index i of the middle class hit by the split point
        gb_C,         // sub = the gb_A token of the reflected vertex
        shift_level,  // value = dyadic level of a pair, for the direct 2-subset colouring
        pipeline,     // sub = the scheme token behind a type-graph colour
    };
    Kind kind = Kind::clique;
    int value = 0;
    char cls = 0;
    unsigned signature = 0;
    int sigbits = 0;
    TokenPtr sub;
    std::string str() const;
};

// Smallest e with n <= 2^e.
int ceil_log2(int n);

// --- per-vertex scheme colourings -----------------------------------------

// Level 1 is a clique: every vertex is its own colour.
ColorToken color_G1(const std::vector<int>& x);

// Halving recursion for level-2 vertices over [2^k]: halves recurse into a
// shared sub-palette (upper half shifted down), straddling vertices take one
// fresh colour per level and side.  At most 2k-1 colours.
ColorToken color_G2(const std::vector<int>& x, int k);

// Level-b recursion (b >= 3) over [2^n], n >= b: split at the dyadic point
// T of (x_1, x_{2b-1}); middle classes B_i get one colour each, the low
// class A gets (signature, sub-colour of the f-image), the high class C
// inherits the colour of its reflection in A.
ColorToken color_Gb(int b, int n, const std::vector<int>& x);

// Signature bits of a low-class vertex: entry per i in [3, 2b-2], set iff
// f(x_1, x_i) = f(x_1, x_{i+1}).
std::vector<int> class_signature(int b, const std::vector<int>& x);

// --- palettes and flattening ------------------------------------------------

int sub_exponent(int b, int n);     // exponent handed to the level-(b-1) scheme
long long g2_palette(int k);        // 2k - 1
long long gb_palette(int b, int n); // (2b-6) + 2^{2b-3} * palette of the sub-scheme

int flatten_g2(const ColorToken& t);
long long flatten_gb(const ColorToken& t, int b, int n);

// --- whole-graph colourings ---------------------------------------------------

struct Coloring {
    std::string graph_desc;
    std::vector<TokenPtr> tokens;   // aligned with the vertex enumeration
    std::vector<long long> colors;  // flattened
    long long palette_bound = 0;    // size of the scheme's full palette
    long long colors_used = 0;      // distinct flattened colours
    std::string legend;
};

// Colour all level-b vertices over ground set [n]; non-powers of two are
// padded up to the next power of two (induced subgraphs inherit properness).
Coloring color_gb_graph(int b, int n);

// Colour the type-graph on k-subsets of [n]: secondary types via their dual,
// reducible types via the widest factor's projection, irreducible types via
// the boundary-element map into the level-(b-1) scheme (b = 2 is a clique
// colouring by first elements).  Needs no edges.
Coloring color_typegraph(int n, const OrderType& tau);

// Direct colouring of 2-subsets: c({i,j}) = f(i,j), exactly ceil_log2(n)
// colours, proper because a common endpoint cannot carry the same dyadic
// level on both sides.
Coloring shift_pair_coloring(int n);

struct MonochromaticEdge {
    long long edge_index = 0;
    int u = 0, v = 0;
};

struct ProperReport {
    std::vector<MonochromaticEdge> monochromatic;
    long long colors_used = 0;
    bool ok() const { return monochromatic.empty(); }
};

ProperReport verify_proper(const Graph& g, const Coloring& c);

std::string coloring_json(const Coloring& c);

}  // namespace tg
