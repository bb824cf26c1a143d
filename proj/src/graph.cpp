#include "atlasgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace atlasgraph {

namespace {

std::string edge_str(int u, int v, int label) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ", label " +
           std::to_string(label) + ")";
}

}  // namespace

LabeledGraph make_labeled_graph(const std::vector<int>& vertex_dims,
                                const std::vector<std::tuple<int, int, int>>& edges) {
    LabeledGraph g;
    const int n = static_cast<int>(vertex_dims.size());
    g.vertices.reserve(vertex_dims.size());
    for (int i = 0; i < n; ++i) {
        if (vertex_dims[i] < 1)
            throw NonPositiveLabelError("vertex " + std::to_string(i) +
                                        " has non-positive dimension label " +
                                        std::to_string(vertex_dims[i]));
        g.vertices.push_back({i, vertex_dims[i]});
    }

    g.edges.reserve(edges.size());
    for (const auto& [eu, ev, label] : edges) {
        if (eu == ev)
            throw SelfLoopError("self-loop at edge " + edge_str(eu, ev, label));
        if (eu < 0 || eu >= n || ev < 0 || ev >= n)
            throw BadEndpointError("edge " + edge_str(eu, ev, label) +
                                   " references a vertex outside 0.." +
                                   std::to_string(n - 1));
        if (label < 1)
            throw NonPositiveLabelError("edge " + edge_str(eu, ev, label) +
                                        " has non-positive label");
        g.edges.push_back({std::min(eu, ev), std::max(eu, ev), label});
    }

    std::sort(g.edges.begin(), g.edges.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (size_t i = 1; i < g.edges.size(); ++i) {
        const auto& a = g.edges[i - 1];
        const auto& b = g.edges[i];
        if (a.u == b.u && a.v == b.v)
            throw DuplicateEdgeError("duplicate edge " + edge_str(b.u, b.v, b.label) +
                                     " (pair already labeled " + std::to_string(a.label) + ")");
    }

    if (n > 0) {
        const int d0 = g.vertices[0].dim;
        bool uniform = std::all_of(g.vertices.begin(), g.vertices.end(),
                                   [d0](const ChartVertex& v) { return v.dim == d0; });
        if (uniform) g.uniform_dim = d0;
    }
    return g;
}

Multigraph expand_multigraph(const LabeledGraph& g) {
    Multigraph m;
    m.vertex_count = g.vertex_count();
    for (const auto& e : g.edges)
        for (int copy = 1; copy <= e.label; ++copy)
            m.edges.push_back({e.u, e.v, copy});
    return m;
}

std::vector<std::vector<int>> connected_components(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    std::vector<std::vector<int>> components;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const LabeledGraph& g) {
    return connected_components(g).size() == 1;
}

}  // namespace atlasgraph
