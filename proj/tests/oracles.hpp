// Brute-force reference implementations the tests check the library against.
// Everything here is deliberately naive and independent of the library's own
// algorithm choices: plain scans, factorial searches, fixpoint loops.

#ifndef ATLASGRAPH_TEST_ORACLES_HPP
#define ATLASGRAPH_TEST_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "atlasgraph/graph.hpp"
#include "atlasgraph/pi1.hpp"

namespace atlasgraph::oracles {

// Component count by depth-first reachability on an adjacency matrix.
int component_count(const LabeledGraph& g);
int component_count(const Multigraph& m);

// |E_H| - |V| + c of the expanded multigraph, everything recomputed here.
int multigraph_rank(const LabeledGraph& g);

// Tries every vertex bijection; true if one preserves dims and edge labels.
bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// Least (|V|, dims, row-major labels) sequence over every vertex bijection.
// A complete isomorphism invariant by construction.
std::vector<int> min_encoding(const LabeledGraph& g);

// Number of dim- and label-preserving bijections g -> g, by trying all |V|!.
long long automorphism_count(const LabeledGraph& g);

// Orbit count of edge labelings with values in [lo, hi] under Aut(g):
// sum over automorphisms of range^(edge cycles), divided by |Aut|.
long long burnside_labeling_count(const LabeledGraph& g, int lo, int hi);

// Number of simple cycles in the underlying simple graph.
long long simple_cycle_count(const LabeledGraph& g);

// One pass of adjacent-inverse cancellation; repeated until nothing changes.
GroupWord reduce_to_fixpoint(const GroupWord& w);

// Relabeled copy of g: vertex v becomes perm[v].
LabeledGraph apply_permutation(const LabeledGraph& g, const std::vector<int>& perm);

// Every labeled graph on n vertices with per-pair labels in {absent, 1..max_label}.
void for_each_graph(int n, int max_label, int dim,
                    const std::function<void(const LabeledGraph&)>& fn);

// Every vertex-labeled tree on p vertices (Pruefer sequences for p >= 3).
void for_each_tree(int p, int dim, const std::function<void(const LabeledGraph&)>& fn);

// Random graph with 1..max_vertices vertices and labels in 1..max_label.
LabeledGraph random_graph(std::mt19937& rng, int max_vertices, int max_label, int dim);

std::vector<int> random_permutation(std::mt19937& rng, int n);

}  // namespace atlasgraph::oracles

#endif
