#include "atlasgraph/classify.hpp"

#include <algorithm>
#include <string>

#include "atlasgraph/cycles.hpp"

namespace atlasgraph {

namespace {

void require_connected(const LabeledGraph& g) {
    const auto comps = connected_components(g);
    if (comps.size() != 1)
        throw DisconnectedError("classification requires a connected graph, found " +
                                std::to_string(comps.size()) + " components");
}

bool all_labels_one(const LabeledGraph& g) {
    return std::all_of(g.edges.begin(), g.edges.end(),
                       [](const LabeledEdge& e) { return e.label == 1; });
}

}  // namespace

bool is_homotopy_sphere(const LabeledGraph& g) {
    require_connected(g);
    return g.edge_count() == g.vertex_count() - 1 && all_labels_one(g);
}

bool is_contractible_tree(const LabeledGraph& g) {
    require_connected(g);
    return cycle_rank_simple(g) == 0 && all_labels_one(g);
}

bool is_simply_connected(const LabeledGraph& g) {
    require_connected(g);
    return labeled_cycle_rank(g) == 0;
}

bool is_minimal_atlas_graph(const LabeledGraph& g) {
    require_connected(g);
    if (g.vertex_count() == 1) return true;
    return std::all_of(g.edges.begin(), g.edges.end(),
                       [](const LabeledEdge& e) { return e.label >= 2; });
}

ClassReport classify(const LabeledGraph& g) {
    require_connected(g);
    ClassReport r;
    r.chart_count = g.vertex_count();
    r.labeled_rank = labeled_cycle_rank(g);
    r.is_tree = g.edge_count() == g.vertex_count() - 1;
    r.all_labels_one = all_labels_one(g);
    r.homotopy_sphere = r.is_tree && r.all_labels_one && r.finite;
    r.contractible_tree = r.homotopy_sphere;
    r.minimal_atlas_valid = is_minimal_atlas_graph(g);
    return r;
}

}  // namespace atlasgraph
