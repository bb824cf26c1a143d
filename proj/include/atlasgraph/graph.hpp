#ifndef ATLASGRAPH_GRAPH_HPP
#define ATLASGRAPH_GRAPH_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "atlasgraph/errors.hpp"

namespace atlasgraph {

// A chart of the atlas. `dim` is the manifold dimension carried by the chart.
struct ChartVertex {
    int id = 0;
    int dim = 1;

    friend bool operator==(const ChartVertex&, const ChartVertex&) = default;
};

// An unordered chart pair that overlaps. `label` is the edge multiplicity
// L(e) = kappa + 1, where kappa counts the non-homotopic loops the overlap
// contributes. Stored normalized with u < v.
struct LabeledEdge {
    int u = 0;
    int v = 0;
    int label = 1;

    int kappa() const { return label - 1; }

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Edge-labeled simple graph of an atlas: one vertex per chart, one labeled
// edge per overlapping pair. Build through make_labeled_graph so the
// invariants hold; treat as immutable afterwards.
struct LabeledGraph {
    std::vector<ChartVertex> vertices;  // ids are 0..|V|-1 in order
    std::vector<LabeledEdge> edges;     // sorted by (u, v), u < v
    std::optional<int> uniform_dim;     // set iff all vertex dims agree

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

// Expansion of a LabeledGraph where an edge of label l appears as l parallel
// edges (copy indices 1..l). Parallel edges keep the source edge order.
struct Multigraph {
    struct ParallelEdge {
        int u = 0;
        int v = 0;
        int copy = 1;

        friend bool operator==(const ParallelEdge&, const ParallelEdge&) = default;
    };

    int vertex_count = 0;
    std::vector<ParallelEdge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

// Validating constructor. `edges` entries are (u, v, label) in any order and
// orientation; they come out normalized and sorted. Throws SelfLoopError,
// BadEndpointError, NonPositiveLabelError or DuplicateEdgeError naming the
// offending edge.
LabeledGraph make_labeled_graph(const std::vector<int>& vertex_dims,
                                const std::vector<std::tuple<int, int, int>>& edges);

Multigraph expand_multigraph(const LabeledGraph& g);

// Partition of vertex ids into maximal connected sets of the underlying
// simple graph. Each component is sorted; components ordered by least member.
std::vector<std::vector<int>> connected_components(const LabeledGraph& g);

// True iff g has exactly one connected component (empty graphs are not
// connected).
bool is_connected(const LabeledGraph& g);

}  // namespace atlasgraph

#endif
