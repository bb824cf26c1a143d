// Command-line front end: rank, pi1, classify, canon, iso, enumerate,
// count-graphs. Exit codes: 0 success/affirmative, 2 negative predicate,
// 1 any input or validation failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "atlasgraph/canon.hpp"
#include "atlasgraph/classify.hpp"
#include "atlasgraph/cycles.hpp"
#include "atlasgraph/enumerate.hpp"
#include "atlasgraph/graph.hpp"
#include "atlasgraph/io.hpp"
#include "atlasgraph/pi1.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw atlasgraph::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

atlasgraph::LabeledGraph load_graph(const std::string& path) {
    return atlasgraph::parse_graph(read_file(path));
}

int cmd_rank(const std::string& path) {
    const auto g = load_graph(path);
    const int simple = atlasgraph::cycle_rank_simple(g);
    const int labeled = atlasgraph::labeled_cycle_rank(g);
    std::cout << "simple_rank=" << simple << "\n";
    std::cout << "label_excess=" << labeled - simple << "\n";
    std::cout << "labeled_rank=" << labeled << "\n";
    return 0;
}

int cmd_pi1(const std::string& path, int basepoint) {
    const auto g = load_graph(path);
    const auto p = atlasgraph::presentation(g, basepoint);
    std::cout << "generators " << p.generator_count() << "\n";
    for (int i = 0; i < p.generator_count(); ++i) {
        std::cout << "a" << i << ":";
        for (int v : atlasgraph::walk_vertices(p.multigraph, p.generator_walks[i], p.basepoint))
            std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& path) {
    const auto g = load_graph(path);
    const auto r = atlasgraph::classify(g);
    const char* t = "true";
    const char* f = "false";
    std::cout << "chart_count=" << r.chart_count << "\n";
    std::cout << "labeled_rank=" << r.labeled_rank << "\n";
    std::cout << "is_tree=" << (r.is_tree ? t : f) << "\n";
    std::cout << "all_labels_one=" << (r.all_labels_one ? t : f) << "\n";
    std::cout << "homotopy_sphere=" << (r.homotopy_sphere ? t : f) << "\n";
    std::cout << "contractible_tree=" << (r.contractible_tree ? t : f) << "\n";
    std::cout << "minimal_atlas_valid=" << (r.minimal_atlas_valid ? t : f) << "\n";
    std::cout << "finite=" << (r.finite ? t : f) << "\n";
    return r.homotopy_sphere ? 0 : 2;
}

int cmd_canon(const std::string& path) {
    const auto g = load_graph(path);
    std::cout << atlasgraph::to_hex(atlasgraph::canonical_form(g)) << "\n";
    return 0;
}

int cmd_dot(const std::string& path) {
    std::cout << atlasgraph::render_dot(load_graph(path));
    return 0;
}

int cmd_iso(const std::string& path1, const std::string& path2) {
    const bool same = atlasgraph::are_isomorphic(load_graph(path1), load_graph(path2));
    std::cout << (same ? "isomorphic" : "non-isomorphic") << "\n";
    return same ? 0 : 2;
}

int cmd_enumerate(int order, int max_label, int dim, const std::string& out_path, int jobs) {
    const auto entries = atlasgraph::build_catalog(order, max_label, dim, jobs);
    const std::string text = atlasgraph::render_catalog(entries);
    if (out_path.empty()) {
        std::cout << text;
        std::cerr << entries.size() << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw atlasgraph::Error("cannot write '" + out_path + "'");
        out << text;
        std::cout << entries.size() << "\n";
    }
    return 0;
}

int cmd_count_graphs(int order) {
    std::cout << atlasgraph::count_connected_graphs(order) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Labeled-graph calculator for manifold atlases"};
    app.require_subcommand(1);

    std::string file1, file2, out_path;
    int basepoint = 0;
    int order = 1, max_label = 2, dim = 2, jobs = 1;

    auto* rank = app.add_subcommand("rank", "Cycle ranks of a labeled graph");
    rank->add_option("file", file1, "graph document")->required();

    auto* pi1 = app.add_subcommand("pi1", "Free fundamental-group presentation");
    pi1->add_option("file", file1, "graph document")->required();
    pi1->add_option("--basepoint", basepoint, "basepoint vertex id (default 0)");

    auto* classify = app.add_subcommand("classify", "Homotopy classification report");
    classify->add_option("file", file1, "graph document")->required();

    auto* canon = app.add_subcommand("canon", "Canonical form as hex");
    canon->add_option("file", file1, "graph document")->required();

    auto* dot = app.add_subcommand("dot", "Graphviz export");
    dot->add_option("file", file1, "graph document")->required();

    auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
    iso->add_option("file1", file1, "first graph document")->required();
    iso->add_option("file2", file2, "second graph document")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Catalog of minimal-atlas labeled graphs");
    enumerate->add_option("--order", order, "chart count")->required();
    enumerate->add_option("--max-label", max_label, "largest edge label")->required();
    enumerate->add_option("--dim", dim, "uniform vertex dimension (default 2)");
    enumerate->add_option("--out", out_path, "write records here instead of stdout");
    enumerate->add_option("--jobs", jobs, "worker threads (default 1)");

    auto* count = app.add_subcommand("count-graphs", "Count connected graphs up to isomorphism");
    count->add_option("--order", order, "vertex count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rank->parsed()) return cmd_rank(file1);
        if (pi1->parsed()) return cmd_pi1(file1, basepoint);
        if (classify->parsed()) return cmd_classify(file1);
        if (canon->parsed()) return cmd_canon(file1);
        if (dot->parsed()) return cmd_dot(file1);
        if (iso->parsed()) return cmd_iso(file1, file2);
        if (enumerate->parsed()) return cmd_enumerate(order, max_label, dim, out_path, jobs);
        if (count->parsed()) return cmd_count_graphs(order);
    } catch (const atlasgraph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
