#ifndef ATLASGRAPH_CLASSIFY_HPP
#define ATLASGRAPH_CLASSIFY_HPP

#include "atlasgraph/graph.hpp"

namespace atlasgraph {

// Homotopy-level classification of a connected labeled graph. All predicates
// throw DisconnectedError on disconnected input.
struct ClassReport {
    int chart_count = 0;
    int labeled_rank = 0;
    bool is_tree = false;
    bool all_labels_one = false;
    bool homotopy_sphere = false;
    bool contractible_tree = false;
    bool minimal_atlas_valid = false;
    bool finite = true;  // concrete inputs are always finite; kept for the record

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

// Finite tree with every label 1.
bool is_homotopy_sphere(const LabeledGraph& g);

// Tree with every label 1; a label >= 2 adds a loop and defeats contraction.
bool is_contractible_tree(const LabeledGraph& g);

// Labeled cycle rank zero.
bool is_simply_connected(const LabeledGraph& g);

// Single chart, or every overlap splits into at least two pieces (all labels
// >= 2); otherwise two charts could merge into one.
bool is_minimal_atlas_graph(const LabeledGraph& g);

ClassReport classify(const LabeledGraph& g);

}  // namespace atlasgraph

#endif
