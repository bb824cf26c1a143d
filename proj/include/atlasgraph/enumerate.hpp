#ifndef ATLASGRAPH_ENUMERATE_HPP
#define ATLASGRAPH_ENUMERATE_HPP

#include <vector>

#include "atlasgraph/canon.hpp"
#include "atlasgraph/classify.hpp"
#include "atlasgraph/graph.hpp"

namespace atlasgraph {

// One labeled graph of a catalog, keyed by its canonical form.
struct CatalogEntry {
    CanonicalForm canonical;
    int order = 0;        // chart count
    int dim = 1;          // uniform vertex dimension of the catalog
    int label_bound = 0;  // max label used (0 when edgeless)
    int labeled_rank = 0;
    ClassReport report;
};

// One representative per isomorphism class of connected simple graphs on p
// vertices (labels all 1, uniform dim), grown by attaching vertex p to every
// nonempty neighbor subset of every (p-1)-representative and de-duplicating
// by canonical form. Output sorted by canonical bytes. With jobs > 1 the
// parent graphs are split across threads; results do not depend on the
// worker count. Throws TooLargeError outside 1..max_order.
std::vector<LabeledGraph> enumerate_connected_graphs(int p, int dim = 1, int jobs = 1,
                                                     int max_order = 8);

int count_connected_graphs(int p, int jobs = 1, int max_order = 8);

// One representative per orbit of edge labelings E(g) -> [min_label,
// max_label] under Aut(g): the lexicographically least assignment of each
// orbit, in ascending assignment order. min_label defaults to 2, the
// smallest label a minimal atlas admits.
std::vector<LabeledGraph> enumerate_labelings(const LabeledGraph& g, int min_label = 2,
                                              int max_label = 2);

// Connected graphs of order p with every edge label in [2, max_label], one
// entry per isomorphism class, sorted by canonical bytes. p = 1 yields the
// single-chart entry.
std::vector<CatalogEntry> build_catalog(int p, int max_label, int dim = 1, int jobs = 1,
                                        int max_order = 8);

}  // namespace atlasgraph

#endif
