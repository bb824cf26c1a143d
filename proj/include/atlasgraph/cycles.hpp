#ifndef ATLASGRAPH_CYCLES_HPP
#define ATLASGRAPH_CYCLES_HPP

#include <vector>

#include "atlasgraph/graph.hpp"

namespace atlasgraph {

// One traversal of a multigraph edge. `forward` means u -> v of the stored
// orientation.
struct WalkStep {
    int edge = 0;  // index into Multigraph::edges
    bool forward = true;

    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

using EdgeWalk = std::vector<WalkStep>;

// Rooted spanning forest of a multigraph. Construction is breadth-first with
// vertices visited in ascending id order and edges in stored order, so equal
// inputs always yield the same forest.
struct SpanningForest {
    std::vector<int> roots;          // ascending, one per component
    std::vector<int> parent_edge;    // per vertex; -1 at roots
    std::vector<int> parent_vertex;  // per vertex; -1 at roots
    std::vector<int> depth;          // per vertex; 0 at roots
    std::vector<int> tree_edges;     // ascending multigraph edge indices

    int component_count() const { return static_cast<int>(roots.size()); }

    friend bool operator==(const SpanningForest&, const SpanningForest&) = default;
};

// Fundamental cycle basis: one closed walk per non-tree edge, anchored at the
// root of the (single) component.
struct CycleBasis {
    std::vector<EdgeWalk> cycles;

    friend bool operator==(const CycleBasis&, const CycleBasis&) = default;
};

SpanningForest spanning_forest(const Multigraph& m);

// Unique tree walk between two vertices of the same component.
EdgeWalk tree_path(const Multigraph& m, const SpanningForest& f, int from, int to);

// Vertex sequence visited by a walk starting at `start` (length |walk|+1).
std::vector<int> walk_vertices(const Multigraph& m, const EdgeWalk& walk, int start);

// |E| - |V| + c of the underlying simple graph.
int cycle_rank_simple(const LabeledGraph& g);

// Cycle rank of the multigraph expansion, computed on the labels directly:
// rank of the underlying graph plus sum of (L(e) - 1) over edges with
// L(e) >= 2. Zero exactly when the graph is a forest and every label is 1.
int labeled_cycle_rank(const LabeledGraph& g);

// Requires m connected; throws DisconnectedError otherwise. Each cycle walks
// the tree from the root to one endpoint of a non-tree edge, crosses it, and
// returns through the tree.
CycleBasis cycle_basis(const Multigraph& m);

}  // namespace atlasgraph

#endif
