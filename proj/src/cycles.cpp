#include "atlasgraph/cycles.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace atlasgraph {

namespace {

// adj[u] lists (edge index, other endpoint) in stored edge order.
std::vector<std::vector<std::pair<int, int>>> incidence(const Multigraph& m) {
    std::vector<std::vector<std::pair<int, int>>> adj(m.vertex_count);
    for (int i = 0; i < m.edge_count(); ++i) {
        const auto& e = m.edges[i];
        adj[e.u].push_back({i, e.v});
        adj[e.v].push_back({i, e.u});
    }
    return adj;
}

}  // namespace

SpanningForest spanning_forest(const Multigraph& m) {
    const int n = m.vertex_count;
    const auto adj = incidence(m);

    SpanningForest f;
    f.parent_edge.assign(n, -1);
    f.parent_vertex.assign(n, -1);
    f.depth.assign(n, 0);

    std::vector<bool> visited(n, false);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        f.roots.push_back(start);
        visited[start] = true;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& [ei, w] : adj[u]) {
                if (visited[w]) continue;
                visited[w] = true;
                f.parent_edge[w] = ei;
                f.parent_vertex[w] = u;
                f.depth[w] = f.depth[u] + 1;
                f.tree_edges.push_back(ei);
                q.push(w);
            }
        }
    }
    std::sort(f.tree_edges.begin(), f.tree_edges.end());
    return f;
}

EdgeWalk tree_path(const Multigraph& m, const SpanningForest& f, int from, int to) {
    // Climb both endpoints to their common ancestor.
    std::vector<int> from_chain;  // vertices from -> root
    for (int v = from; v != -1; v = f.parent_vertex[v]) from_chain.push_back(v);

    std::vector<bool> on_chain(m.vertex_count, false);
    for (int v : from_chain) on_chain[v] = true;

    int lca = to;
    EdgeWalk descent;  // parent-to-child steps, collected to -> lca
    while (!on_chain[lca]) {
        int ei = f.parent_edge[lca];
        descent.push_back({ei, m.edges[ei].u != lca});  // parent -> child
        lca = f.parent_vertex[lca];
    }

    EdgeWalk walk;
    for (int v : from_chain) {
        if (v == lca) break;
        int ei = f.parent_edge[v];
        walk.push_back({ei, m.edges[ei].u == v});  // child -> parent
    }
    // Append lca -> to; the climb collected these deepest-first.
    for (auto it = descent.rbegin(); it != descent.rend(); ++it) walk.push_back(*it);
    return walk;
}

std::vector<int> walk_vertices(const Multigraph& m, const EdgeWalk& walk, int start) {
    std::vector<int> seq{start};
    int cur = start;
    for (const auto& step : walk) {
        const auto& e = m.edges[step.edge];
        cur = step.forward ? e.v : e.u;
        seq.push_back(cur);
    }
    return seq;
}

int cycle_rank_simple(const LabeledGraph& g) {
    const int c = static_cast<int>(connected_components(g).size());
    return g.edge_count() - g.vertex_count() + c;
}

int labeled_cycle_rank(const LabeledGraph& g) {
    int rank = cycle_rank_simple(g);
    for (const auto& e : g.edges)
        if (e.label >= 2) rank += e.label - 1;
    return rank;
}

CycleBasis cycle_basis(const Multigraph& m) {
    const SpanningForest f = spanning_forest(m);
    if (f.component_count() != 1)
        throw DisconnectedError("cycle basis requires a connected multigraph, found " +
                                std::to_string(f.component_count()) + " components");
    const int root = f.roots[0];

    std::vector<bool> in_tree(m.edge_count(), false);
    for (int ei : f.tree_edges) in_tree[ei] = true;

    CycleBasis basis;
    for (int ei = 0; ei < m.edge_count(); ++ei) {
        if (in_tree[ei]) continue;
        const auto& e = m.edges[ei];
        EdgeWalk cycle = tree_path(m, f, root, e.u);
        cycle.push_back({ei, true});
        EdgeWalk back = tree_path(m, f, e.v, root);
        cycle.insert(cycle.end(), back.begin(), back.end());
        basis.cycles.push_back(std::move(cycle));
    }
    return basis;
}

}  // namespace atlasgraph
