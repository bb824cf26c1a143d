#ifndef ATLASGRAPH_IO_HPP
#define ATLASGRAPH_IO_HPP

#include <string>
#include <vector>

#include "atlasgraph/canon.hpp"
#include "atlasgraph/enumerate.hpp"
#include "atlasgraph/graph.hpp"

namespace atlasgraph {

// Graph document, version 1. Line oriented:
//
//   atlasgraph 1
//   dim 2            (optional; must match every vertex)
//   vertex 0 2       (id dim)
//   vertex 1 2
//   edge 0 1 3       (u v label)
//
// '#' starts a comment. Unknown directives, arity or type mismatches raise
// ParseError with the line/column; structural violations raise the matching
// graph error naming the edge index.
LabeledGraph parse_graph(const std::string& text);

// Canonical document for g; parse_graph(render_graph(g)) == g field by field.
std::string render_graph(const LabeledGraph& g);

// Graphviz text. Each labeled edge appears once, annotated with both the
// multiplicity L and the loop count kappa = L - 1.
std::string render_dot(const LabeledGraph& g);

std::string to_hex(const CanonicalForm& form);

// One space-separated record: canon_hex order dim max_label labeled_rank
// sphere minimal.
std::string catalog_record(const CatalogEntry& entry);

std::string render_catalog(const std::vector<CatalogEntry>& entries);

}  // namespace atlasgraph

#endif
