#ifndef ATLASGRAPH_CANON_HPP
#define ATLASGRAPH_CANON_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "atlasgraph/graph.hpp"

namespace atlasgraph {

// Relabeling-invariant encoding of a labeled graph: two graphs have equal
// bytes exactly when some vertex bijection preserves dims and edge labels.
// Layout: |V|, vertex dims in canonical order, then the upper-triangular
// adjacency labels (0 = no edge) row-major in canonical order, each value a
// big-endian 32-bit word.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

// Color refinement seeded with (dim, incident label multiset), then
// backtracking over the remaining color classes for the least encoding.
CanonicalForm canonical_form(const LabeledGraph& g);

// Rebuilds a graph isomorphic to the one the form was computed from.
LabeledGraph decode_canonical(const CanonicalForm& c);

bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// All dim- and label-preserving vertex bijections g -> g, as images indexed
// by vertex. Throws TooLargeError above max_vertices.
std::vector<std::vector<int>> automorphisms(const LabeledGraph& g, int max_vertices = 10);

long long automorphism_group_order(const LabeledGraph& g, int max_vertices = 10);

}  // namespace atlasgraph

#endif
