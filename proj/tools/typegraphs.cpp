// Command-line surface over the library: decompose types, emit graphs,
// run the colouring schemes, verify the homomorphisms, and compare the
// schemes against exact chromatic numbers.
//
// Exit codes: 0 success, 2 validation error, 3 a verification found
// violations, 4 a search budget ran out.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tg/coloring.hpp"
#include "tg/error.hpp"
#include "tg/graph.hpp"
#include "tg/homomorphism.hpp"
#include "tg/oracle.hpp"
#include "tg/order_type.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kViolations = 3;
constexpr int kBudget = 4;

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) tg::fail(tg::errc::BadRange, "cannot open output file: " + path);
    out << text;
}

std::pair<int, int> parse_n_range(const std::string& s) {
    const auto parse_int = [](const std::string& part) {
        if (part.empty()) tg::fail(tg::errc::BadRange, "empty value in n range");
        for (char c : part)
            if (c < '0' || c > '9')
                tg::fail(tg::errc::BadRange, "n range must be <lo>..<hi> or a single integer");
        return std::stoi(part);
    };
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(s);
        return {v, v};
    }
    const int lo = parse_int(s.substr(0, dots));
    const int hi = parse_int(s.substr(dots + 2));
    if (lo > hi) tg::fail(tg::errc::BadRange, "n range is reversed");
    return {lo, hi};
}

std::string decompose_text(const std::string& type_str) {
    const tg::OrderType tau = tg::parse_type(type_str);
    if (tau.trivial()) return "trivial; blocks: " + tau.str() + "; b=1\n";
    const auto factors = tg::factorize(tau);
    if (factors.size() > 1) {
        std::string line = "factors: ";
        int bstar = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) line += " | ";
            line += factors[i].str();
            bstar = std::max(bstar, tg::block_decompose(factors[i]).b());
        }
        line += "; b*=" + std::to_string(bstar) + "\n";
        return line;
    }
    const tg::BlockDecomposition dec = tg::block_decompose(tau);
    std::string out;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        if (i > 0) out += ' ';
        out += dec.blocks[i].str();
    }
    out += "\nb=" + std::to_string(dec.b()) + "; s =";
    for (int v : dec.s) out += ' ' + std::to_string(v);
    out += '\n';
    return out;
}

// Shared by build/color/chi: materialise the requested graph.
tg::Graph build_from(const std::string& kind, const std::string& type_str, int n, int b) {
    if (kind == "typegraph") {
        if (type_str.empty())
            tg::fail(tg::errc::BadRange, "typegraph needs --type");
        if (n <= 0) tg::fail(tg::errc::BadRange, "typegraph needs --n");
        return tg::build_typegraph(n, tg::parse_type(type_str));
    }
    if (kind == "gb") {
        if (b <= 0) tg::fail(tg::errc::BadRange, "gb needs --b");
        if (n <= 0) tg::fail(tg::errc::BadRange, "gb needs --n");
        return tg::build_Gb(b, n);
    }
    tg::fail(tg::errc::BadRange, "kind must be 'typegraph' or 'gb'");
}

int cmd_build(const std::string& kind, const std::string& type_str, int n, int b,
              const std::string& format, const std::string& out_path) {
    const tg::Graph g = build_from(kind, type_str, n, b);
    if (format == "dimacs") {
        std::ostringstream os;
        tg::export_dimacs(g, os);
        emit(out_path, os.str());
    } else if (format == "json") {
        emit(out_path, tg::graph_json(g) + "\n");
    } else {
        tg::fail(tg::errc::BadRange, "format must be 'dimacs' or 'json'");
    }
    return kOk;
}

int cmd_color(const std::string& kind, const std::string& type_str, int n, int b,
              const std::string& out_path) {
    tg::Coloring c;
    if (kind == "typegraph") {
        if (type_str.empty())
            tg::fail(tg::errc::BadRange, "typegraph needs --type");
        if (n <= 0) tg::fail(tg::errc::BadRange, "typegraph needs --n");
        c = tg::color_typegraph(n, tg::parse_type(type_str));
    } else if (kind == "gb") {
        if (b <= 0) tg::fail(tg::errc::BadRange, "gb needs --b");
        if (n <= 0) tg::fail(tg::errc::BadRange, "gb needs --n");
        c = tg::color_gb_graph(b, n);
    } else {
        tg::fail(tg::errc::BadRange, "kind must be 'typegraph' or 'gb'");
    }
    const tg::Graph g = build_from(kind, type_str, n, b);
    const tg::ProperReport rep = tg::verify_proper(g, c);
    nlohmann::json j;
    j["coloring"] = nlohmann::json::parse(tg::coloring_json(c));
    j["proper"] = rep.ok();
    j["monochromatic_edges"] = rep.monochromatic.size();
    emit(out_path, j.dump() + "\n");
    return rep.ok() ? kOk : kViolations;
}

int cmd_verify_hom(const std::string& which, const std::string& type_str, int n,
                   const std::string& out_path) {
    const tg::OrderType tau = tg::parse_type(type_str);
    tg::VertexMap vm;
    tg::HomReport rep;
    if (which == "lower") {
        vm = tg::hom_lower(tau, n);
        const int b = tg::block_decompose(tau).b();
        const tg::Graph src =
            tg::build_typegraph(n, b == 2 ? tg::parse_type("12") : tg::sigma(b - 1));
        rep = tg::verify_homomorphism(src, tg::typegraph_view(tau.width() * n, tau), vm);
    } else if (which == "upper") {
        const tg::Graph src = tg::build_typegraph(n, tau);
        const int b = tg::block_decompose(tau).b();
        vm.source_desc = src.describe();
        vm.target_desc = "auxiliary b=" + std::to_string(b - 1) + " n=" + std::to_string(n);
        vm.source_vertices = src.vertices;
        for (const auto& X : src.vertices) vm.images.push_back(tg::hom_upper(tau, X));
        rep = tg::verify_homomorphism(src, tg::gb_view(b - 1, n), vm);
    } else if (which == "reducible") {
        vm = tg::hom_reducible(tau, n);
        int bstar = 0;
        for (const auto& f : tg::factorize(tau))
            bstar = std::max(bstar, tg::block_decompose(f).b());
        const tg::Graph src =
            tg::build_typegraph(n, bstar == 2 ? tg::parse_type("12") : tg::sigma(bstar - 1));
        rep = tg::verify_homomorphism(src, tg::typegraph_view(tau.width() * n, tau), vm);
    } else {
        tg::fail(tg::errc::BadRange, "which must be 'lower', 'upper', or 'reducible'");
    }
    nlohmann::json j = nlohmann::json::parse(tg::hom_report_json(rep));
    j["source"] = vm.source_desc;
    j["target"] = vm.target_desc;
    emit(out_path, j.dump() + "\n");
    return rep.ok() ? kOk : kViolations;
}

int cmd_chi(const std::string& kind, const std::string& type_str, int n, int b,
            const tg::Budget& budget, const std::string& out_path) {
    const tg::Graph g = build_from(kind, type_str, n, b);
    const tg::ChromaticResult r = tg::exact_chromatic(g, budget);
    emit(out_path, tg::chromatic_json(r) + "\n");
    return r.budget_exceeded ? kBudget : kOk;
}

int cmd_table(const std::vector<std::string>& type_strs, const std::string& n_range,
              const tg::Budget& budget, const std::string& out_path) {
    const auto [lo, hi] = parse_n_range(n_range);
    std::string csv = "type,n,paper_colors,chi_exact,greedy\n";
    bool exceeded = false;
    for (const auto& ts : type_strs) {
        const tg::OrderType tau = tg::parse_type(ts);
        for (int n = std::max(lo, tau.width()); n <= hi; ++n) {
            const tg::Coloring scheme = tg::color_typegraph(n, tau);
            const tg::Graph g = tg::build_typegraph(n, tau);
            std::vector<int> natural(g.vertices.size());
            for (std::size_t i = 0; i < natural.size(); ++i) natural[i] = int(i);
            const tg::Coloring greedy = tg::greedy_coloring(g, natural);
            const tg::ChromaticResult r = tg::exact_chromatic(g, budget);
            csv += ts + ',' + std::to_string(n) + ',' + std::to_string(scheme.colors_used) + ',';
            if (r.budget_exceeded)
                exceeded = true;
            else
                csv += std::to_string(r.chi);
            csv += ',' + std::to_string(greedy.colors_used) + '\n';
        }
    }
    emit(out_path, csv);
    return exceeded ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order types of set pairs, their type-graphs, and colourings"};
    app.require_subcommand(1);

    std::string type_str;
    std::vector<std::string> type_list;
    std::string kind;
    std::string which;
    std::string n_range;
    std::string format = "dimacs";
    std::string out_path;
    int n = 0;
    int b = 0;
    tg::Budget budget;
    unsigned long long seed = 0;
    app.add_option("--seed", seed,
                   "seed for sampled checks (current subcommands are deterministic)");

    CLI::App* dec = app.add_subcommand("decompose", "block decomposition of a type");
    dec->add_option("--type", type_str, "type as a digit string over {1,2,3}")->required();
    dec->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* bld = app.add_subcommand("build", "emit a graph (DIMACS or JSON)");
    bld->add_option("kind", kind, "'typegraph' or 'gb'")->required();
    bld->add_option("--type", type_str, "type for a typegraph");
    bld->add_option("--n", n, "ground-set size");
    bld->add_option("--b", b, "level for a gb graph");
    bld->add_option("--format", format, "'dimacs' (default) or 'json'");
    bld->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* col = app.add_subcommand("color", "colour a graph and check properness");
    col->add_option("kind", kind, "'typegraph' or 'gb'")->required();
    col->add_option("--type", type_str, "type for a typegraph");
    col->add_option("--n", n, "ground-set size");
    col->add_option("--b", b, "level for a gb graph");
    col->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* vh = app.add_subcommand("verify-hom", "check one of the homomorphisms");
    vh->add_option("which", which, "'lower', 'upper', or 'reducible'")->required();
    vh->add_option("--type", type_str, "type")->required();
    vh->add_option("--n", n, "source ground-set size")->required();
    vh->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* chi = app.add_subcommand("chi", "exact chromatic number");
    chi->add_option("kind", kind, "'typegraph' or 'gb'")->required();
    chi->add_option("--type", type_str, "type for a typegraph");
    chi->add_option("--n", n, "ground-set size");
    chi->add_option("--b", b, "level for a gb graph");
    chi->add_option("--budget-nodes", budget.max_nodes, "search node cap (0 = unlimited)");
    chi->add_option("--budget-ms", budget.max_ms, "wall-clock cap in ms (0 = unlimited)");
    chi->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* tab = app.add_subcommand("table", "CSV of scheme vs exact vs greedy colours");
    tab->add_option("--type", type_list, "types to tabulate (repeatable)")->required();
    tab->add_option("--n", n_range, "n or lo..hi range")->required();
    tab->add_option("--budget-nodes", budget.max_nodes, "search node cap per instance");
    tab->add_option("--budget-ms", budget.max_ms, "wall-clock cap per instance in ms");
    tab->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if (dec->parsed()) {
            emit(out_path, decompose_text(type_str));
            return kOk;
        }
        if (bld->parsed()) return cmd_build(kind, type_str, n, b, format, out_path);
        if (col->parsed()) return cmd_color(kind, type_str, n, b, out_path);
        if (vh->parsed()) return cmd_verify_hom(which, type_str, n, out_path);
        if (chi->parsed()) return cmd_chi(kind, type_str, n, b, budget, out_path);
        if (tab->parsed()) return cmd_table(type_list, n_range, budget, out_path);
    } catch (const tg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == tg::errc::BudgetExceeded ? kBudget : kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
    return kValidation;
}
