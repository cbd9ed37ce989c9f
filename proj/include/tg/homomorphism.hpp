#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tg/error.hpp"
#include "tg/graph.hpp"
#include "tg/order_type.hpp"

namespace tg {

// Vertex map materialised as an explicit table: images[i] is the image
// payload of source vertex i (source vertices in enumeration order).
struct VertexMap {
    std::string source_desc;
    std::string target_desc;
    std::vector<std::vector<int>> source_vertices;
    std::vector<std::vector<int>> images;
};

struct HomViolation {
    long long edge_index = 0;
    int u = 0, v = 0;   // source vertex indices
    std::string reason;
};

struct HomReport {
    std::vector<HomViolation> violations;  // sorted by edge index
    long long collisions = 0;              // source vertices minus distinct images
    long long edges_checked = 0;
    bool ok() const { return violations.empty(); }
};

std::string hom_report_json(const HomReport& r);

// Implicit target for graphs too large to materialise: membership plus
// adjacency predicates are all the verifier needs.
struct TargetView {
    std::function<bool(const std::vector<int>&)> is_vertex;
    std::function<bool(const std::vector<int>&, const std::vector<int>&)> adjacent;
};

TargetView typegraph_view(int n, const OrderType& tau);
TargetView gb_view(int b, int n);

// The nested scaffolding sets R*_0..R*_b of a primary irreducible type:
// R_0 = {}, R_i = extend_left(B_i, R_{i-1}), jointly rank-normalised so that
// order_type_of(R*_i, R*_{i-1}) = B_i still holds and all values lie in [k].
std::vector<std::vector<int>> build_R_sets(const BlockDecomposition& dec);

// phi({h_1,...,h_{b-1}}) = union over i of { (h_i - 1)k + j : j in R*_i },
// a homomorphism from the shift graph on (b-1)-subsets of [n] into G(kn, tau).
// For b = 2 the source is the complete graph on singletons.
VertexMap hom_lower(const OrderType& tau, int n);

// phi(X) = (x_{s(1)+1}, x_{s(2)}, x_{s(2)+1}, ..., x_{s(b-1)}, x_{s(b-1)+1}),
// a homomorphism from G(n, tau) into the auxiliary graph with b-1 levels.
std::vector<int> hom_upper(const OrderType& tau, const std::vector<int>& X);

// Slice of X belonging to factor i (1-based): positions r+1..s where r and s
// count the X-marks of the factors before/through i.
std::vector<int> hom_project(const OrderType& tau, int i, const std::vector<int>& X);

// psi(X) = union of per-factor pieces: factor i contributes its own offset
// range (c_{i-1} n, c_i n]; nontrivial factors embed via hom_lower applied to
// the first b_i - 1 elements of X, trivial ones contribute the constant
// {c_i n}.  A homomorphism from the shift graph on (b*-1)-subsets into
// G(kn, tau) where b* is the largest per-factor block count.
VertexMap hom_reducible(const OrderType& tau, int n);

HomReport verify_homomorphism(const Graph& src, const Graph& dst, const VertexMap& m);
HomReport verify_homomorphism(const Graph& src, const TargetView& dst, const VertexMap& m);

}  // namespace tg
