// Python bindings: a thin veneer over the library.  Types are passed as
// digit strings, sets and tuples as lists of ints; validation errors
// surface as ValueError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "tg/coloring.hpp"
#include "tg/dyadic.hpp"
#include "tg/error.hpp"
#include "tg/graph.hpp"
#include "tg/homomorphism.hpp"
#include "tg/oracle.hpp"
#include "tg/order_type.hpp"
#include "tg/realization.hpp"

namespace py = pybind11;

namespace {

py::dict report_dict(const tg::HomReport& rep, const tg::VertexMap& vm) {
    py::dict d;
    d["violations"] = py::int_(rep.violations.size());
    d["collisions"] = py::int_(rep.collisions);
    d["edges_checked"] = py::int_(rep.edges_checked);
    d["source"] = vm.source_desc;
    d["target"] = vm.target_desc;
    d["ok"] = rep.ok();
    return d;
}

const char* polarity_name(tg::Polarity p) {
    switch (p) {
        case tg::Polarity::primary: return "primary";
        case tg::Polarity::secondary: return "secondary";
        default: return "trivial";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "order types of set pairs, the graphs they induce, and their colourings";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const tg::error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // --- order types -----------------------------------------------------

    m.def(
        "order_type_of",
        [](const std::vector<int>& X, const std::vector<int>& Y) {
            return tg::order_type_of(X, Y).str();
        },
        py::arg("X"), py::arg("Y"),
        "mark sequence of the pair (X, Y): 1 = X only, 2 = Y only, 3 = both");

    m.def(
        "dual", [](const std::string& t) { return tg::dual(tg::parse_type(t)).str(); },
        py::arg("type"), "swap the roles of the two sets (1 <-> 2)");

    m.def(
        "width", [](const std::string& t) { return tg::parse_type(t).width(); },
        py::arg("type"), "size of the sets realising the type");

    m.def(
        "is_irreducible",
        [](const std::string& t) { return tg::is_irreducible(tg::parse_type(t)); },
        py::arg("type"), "no balanced proper prefix");

    m.def(
        "factorize",
        [](const std::string& t) {
            std::vector<std::string> out;
            for (const auto& f : tg::factorize(tg::parse_type(t))) out.push_back(f.str());
            return out;
        },
        py::arg("type"), "split into irreducible factors");

    m.def(
        "sigma", [](int k) { return tg::sigma(k).str(); }, py::arg("k"),
        "the width-k shift type 1 3...3 2");

    m.def(
        "block_decompose",
        [](const std::string& t) {
            const tg::BlockDecomposition dec = tg::block_decompose(tg::parse_type(t));
            py::dict d;
            std::vector<std::string> blocks;
            for (const auto& blk : dec.blocks) blocks.push_back(blk.str());
            d["blocks"] = blocks;
            d["polarity"] = polarity_name(dec.polarity);
            d["s"] = dec.s;
            d["b"] = dec.b();
            return d;
        },
        py::arg("type"), "blocks, polarity, and the boundary counts s");

    // --- dyadic machinery --------------------------------------------------

    m.def(
        "dyadic_split",
        [](long long x, long long y) {
            const tg::DyadicSplit s = tg::dyadic_split(x, y);
            py::dict d;
            d["f"] = s.f;
            d["q"] = s.q;
            d["T"] = s.T;
            return d;
        },
        py::arg("x"), py::arg("y"),
        "the dyadic interval separating x from y: level f, odd index q, split point T");

    m.def("eta", &tg::eta, py::arg("b"), py::arg("n"), py::arg("x"),
          "reflection automorphism of the level-b graph over [2^n]");

    m.def("ceil_log2", &tg::ceil_log2, py::arg("n"), "smallest e with n <= 2^e");

    // --- graphs ------------------------------------------------------------

    py::class_<tg::Graph>(m, "Graph")
        .def_readonly("n", &tg::Graph::n)
        .def_readonly("vertices", &tg::Graph::vertices)
        .def_readonly("edges", &tg::Graph::edges)
        .def_property_readonly("vertex_count", &tg::Graph::vertex_count)
        .def_property_readonly("edge_count", &tg::Graph::edge_count)
        .def("index_of", &tg::Graph::index_of, py::arg("payload"))
        .def("describe", &tg::Graph::describe)
        .def("dimacs",
             [](const tg::Graph& g) {
                 std::ostringstream os;
                 tg::export_dimacs(g, os);
                 return os.str();
             })
        .def("__repr__",
             [](const tg::Graph& g) { return "<Graph " + g.describe() + ">"; });

    m.def(
        "build_typegraph",
        [](int n, const std::string& t) { return tg::build_typegraph(n, tg::parse_type(t)); },
        py::arg("n"), py::arg("type"),
        "graph on the width-sized subsets of [n], adjacent when the pair realises the type");

    m.def("build_gb", &tg::build_Gb, py::arg("b"), py::arg("n"),
          "auxiliary graph on nondecreasing (2b-1)-tuples over [n]");

    // --- colourings ----------------------------------------------------------

    py::class_<tg::Coloring>(m, "Coloring")
        .def_readonly("graph_desc", &tg::Coloring::graph_desc)
        .def_readonly("colors", &tg::Coloring::colors)
        .def_readonly("palette_bound", &tg::Coloring::palette_bound)
        .def_readonly("colors_used", &tg::Coloring::colors_used)
        .def_readonly("legend", &tg::Coloring::legend)
        .def("__repr__", [](const tg::Coloring& c) {
            return "<Coloring " + c.graph_desc + ": " + std::to_string(c.colors_used) +
                   " colours>";
        });

    m.def(
        "color_typegraph",
        [](int n, const std::string& t) { return tg::color_typegraph(n, tg::parse_type(t)); },
        py::arg("n"), py::arg("type"), "the scheme colouring of a type-graph");

    m.def("color_gb", &tg::color_gb_graph, py::arg("b"), py::arg("n"),
          "the scheme colouring of the level-b auxiliary graph");

    m.def("shift_pair_coloring", &tg::shift_pair_coloring, py::arg("n"),
          "colour 2-subsets by the dyadic level of the pair");

    m.def(
        "verify_proper",
        [](const tg::Graph& g, const tg::Coloring& c) {
            return (long long)(tg::verify_proper(g, c).monochromatic.size());
        },
        py::arg("graph"), py::arg("coloring"),
        "number of monochromatic edges (0 means proper)");

    m.def("gb_palette", &tg::gb_palette, py::arg("b"), py::arg("n"),
          "palette size promised by the level-b scheme");

    // --- homomorphisms ---------------------------------------------------------

    m.def(
        "hom_upper",
        [](const std::string& t, const std::vector<int>& X) {
            return tg::hom_upper(tg::parse_type(t), X);
        },
        py::arg("type"), py::arg("X"), "boundary tuple of a type-graph vertex");

    m.def(
        "hom_project",
        [](const std::string& t, int i, const std::vector<int>& X) {
            return tg::hom_project(tg::parse_type(t), i, X);
        },
        py::arg("type"), py::arg("i"), py::arg("X"), "slice of X owned by factor i");

    m.def(
        "verify_hom_lower",
        [](const std::string& t, int n) {
            const tg::OrderType tau = tg::parse_type(t);
            const tg::VertexMap vm = tg::hom_lower(tau, n);
            const int b = tg::block_decompose(tau).b();
            const tg::Graph src =
                tg::build_typegraph(n, b == 2 ? tg::parse_type("12") : tg::sigma(b - 1));
            const auto rep =
                tg::verify_homomorphism(src, tg::typegraph_view(tau.width() * n, tau), vm);
            return report_dict(rep, vm);
        },
        py::arg("type"), py::arg("n"),
        "check the scaffolding map from the shift graph into the blown-up type-graph");

    m.def(
        "verify_hom_upper",
        [](const std::string& t, int n) {
            const tg::OrderType tau = tg::parse_type(t);
            const tg::Graph src = tg::build_typegraph(n, tau);
            const int b = tg::block_decompose(tau).b();
            tg::VertexMap vm;
            vm.source_desc = src.describe();
            vm.target_desc = "auxiliary b=" + std::to_string(b - 1) + " n=" + std::to_string(n);
            vm.source_vertices = src.vertices;
            for (const auto& X : src.vertices) vm.images.push_back(tg::hom_upper(tau, X));
            const auto rep = tg::verify_homomorphism(src, tg::gb_view(b - 1, n), vm);
            return report_dict(rep, vm);
        },
        py::arg("type"), py::arg("n"),
        "check the boundary-tuple map from the type-graph into the auxiliary graph");

    m.def(
        "verify_hom_reducible",
        [](const std::string& t, int n) {
            const tg::OrderType tau = tg::parse_type(t);
            const tg::VertexMap vm = tg::hom_reducible(tau, n);
            int bstar = 0;
            for (const auto& f : tg::factorize(tau))
                bstar = std::max(bstar, tg::block_decompose(f).b());
            const tg::Graph src = tg::build_typegraph(
                n, bstar == 2 ? tg::parse_type("12") : tg::sigma(bstar - 1));
            const auto rep =
                tg::verify_homomorphism(src, tg::typegraph_view(tau.width() * n, tau), vm);
            return report_dict(rep, vm);
        },
        py::arg("type"), py::arg("n"),
        "check the per-factor map for a reducible type");

    // --- exact chromatic number ----------------------------------------------

    py::class_<tg::ChromaticResult>(m, "ChromaticResult")
        .def_readonly("chi", &tg::ChromaticResult::chi)
        .def_readonly("lower", &tg::ChromaticResult::lower)
        .def_readonly("upper", &tg::ChromaticResult::upper)
        .def_readonly("colors", &tg::ChromaticResult::colors)
        .def_readonly("nodes_explored", &tg::ChromaticResult::nodes_explored)
        .def_readonly("elapsed_ms", &tg::ChromaticResult::elapsed_ms)
        .def_readonly("budget_exceeded", &tg::ChromaticResult::budget_exceeded)
        .def("__repr__", [](const tg::ChromaticResult& r) {
            return "<ChromaticResult chi=" + std::to_string(r.chi) + " [" +
                   std::to_string(r.lower) + "," + std::to_string(r.upper) + "]>";
        });

    m.def(
        "exact_chromatic",
        [](const tg::Graph& g, long long max_nodes, long long max_ms) {
            return tg::exact_chromatic(g, tg::Budget{max_nodes, max_ms});
        },
        py::arg("graph"), py::arg("max_nodes") = 2'000'000'000LL,
        py::arg("max_ms") = 300'000LL,
        "exact chromatic number with a verified witness (0 disables a cap)");

    m.def(
        "greedy_coloring",
        [](const tg::Graph& g, std::optional<std::vector<int>> order) {
            if (!order) {
                order.emplace(g.vertices.size());
                for (std::size_t i = 0; i < order->size(); ++i) (*order)[i] = int(i);
            }
            return tg::greedy_coloring(g, *order);
        },
        py::arg("graph"), py::arg("order") = py::none(),
        "first-fit along the given order (natural order by default)");

    m.def("greedy_clique", &tg::greedy_clique, py::arg("graph"),
          "a maximal clique found greedily on descending degree");
}
