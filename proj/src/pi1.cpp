#include "atlasgraph/pi1.hpp"

#include <string>

namespace atlasgraph {

FreeGroupPresentation presentation(const LabeledGraph& g, int basepoint) {
    if (basepoint < 0 || basepoint >= g.vertex_count())
        throw BadBasepointError("basepoint " + std::to_string(basepoint) +
                                " outside vertex range 0.." +
                                std::to_string(g.vertex_count() - 1));

    FreeGroupPresentation p;
    p.multigraph = expand_multigraph(g);
    p.basepoint = basepoint;

    const SpanningForest f = spanning_forest(p.multigraph);
    if (f.component_count() != 1)
        throw DisconnectedError("fundamental group requires a connected graph, found " +
                                std::to_string(f.component_count()) + " components");

    std::vector<bool> in_tree(p.multigraph.edge_count(), false);
    for (int ei : f.tree_edges) in_tree[ei] = true;

    for (int ei = 0; ei < p.multigraph.edge_count(); ++ei) {
        if (in_tree[ei]) continue;
        const auto& e = p.multigraph.edges[ei];
        EdgeWalk loop = tree_path(p.multigraph, f, basepoint, e.u);
        loop.push_back({ei, true});
        EdgeWalk back = tree_path(p.multigraph, f, e.v, basepoint);
        loop.insert(loop.end(), back.begin(), back.end());
        p.generator_walks.push_back(std::move(loop));
    }
    return p;
}

GroupWord reduce_word(const GroupWord& w) {
    GroupWord out;
    for (const auto& [gen, exp] : w.letters) {
        if (exp != 1 && exp != -1)
            throw Error("group word exponent must be +1 or -1, got " + std::to_string(exp));
        if (!out.letters.empty() && out.letters.back().first == gen &&
            out.letters.back().second == -exp) {
            out.letters.pop_back();
        } else {
            out.letters.push_back({gen, exp});
        }
    }
    return out;
}

int group_rank(const FreeGroupPresentation& p) {
    return p.generator_count();
}

bool is_trivial(const FreeGroupPresentation& p) {
    return p.generator_count() == 0;
}

}  // namespace atlasgraph
