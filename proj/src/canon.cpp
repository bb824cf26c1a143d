#include "atlasgraph/canon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace atlasgraph {

namespace {

std::vector<std::vector<int>> label_matrix(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> lab(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges) {
        lab[e.u][e.v] = e.label;
        lab[e.v][e.u] = e.label;
    }
    return lab;
}

// Assigns color ids 0..C-1 by the sorted order of key vectors, so isomorphic
// graphs map corresponding vertices to equal ids.
int assign_colors(const std::vector<std::vector<int>>& keys, std::vector<int>& color) {
    std::map<std::vector<int>, int> rank;
    for (const auto& k : keys) rank.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : rank) id = next++;
    for (size_t v = 0; v < keys.size(); ++v) color[v] = rank.at(keys[v]);
    return next;
}

// Iterated refinement. Initial key (dim, sorted incident labels) makes ids
// dim-major; later keys are prefixed with the previous id, which preserves
// that order while splitting classes.
std::vector<int> stable_colors(const LabeledGraph& g, const std::vector<std::vector<int>>& lab) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);

    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> incident;
        for (int u = 0; u < n; ++u)
            if (lab[v][u] != 0) incident.push_back(lab[v][u]);
        std::sort(incident.begin(), incident.end());
        keys[v].push_back(g.vertices[v].dim);
        keys[v].insert(keys[v].end(), incident.begin(), incident.end());
    }
    int classes = assign_colors(keys, color);

    while (true) {
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> around;  // (label, neighbor color)
            for (int u = 0; u < n; ++u)
                if (lab[v][u] != 0) around.push_back({lab[v][u], color[u]});
            std::sort(around.begin(), around.end());
            keys[v].assign(1, color[v]);
            for (const auto& [l, c] : around) {
                keys[v].push_back(l);
                keys[v].push_back(c);
            }
        }
        std::vector<int> refined(n, 0);
        int refined_classes = assign_colors(keys, refined);
        if (refined_classes == classes) break;  // refinement only splits
        color.swap(refined);
        classes = refined_classes;
    }
    return color;
}

// Exhaustive minimization over vertex orders compatible with the color
// blocks. Candidate orders are compared by the adjacency labels in the
// column-by-column sequence a position placement determines; refinement only
// restricts which orders compete, never which graphs compare equal.
struct CanonSearch {
    int n;
    const std::vector<std::vector<int>>& lab;
    std::vector<int> pos_class;               // color class occupying each position
    std::vector<std::vector<int>> class_members;

    std::vector<int> order;     // position -> vertex
    std::vector<bool> used;
    std::vector<int> cur_cols;  // column-incremental labels, length k(k-1)/2
    std::vector<int> best_cols;
    std::vector<int> best_order;
    long long best_version = 0;  // bumped on every replacement
    bool have_best = false;

    CanonSearch(const LabeledGraph& g, const std::vector<std::vector<int>>& lab_,
                const std::vector<int>& color)
        : n(g.vertex_count()), lab(lab_), order(n, -1), used(n, false) {
        const int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        class_members.resize(classes);
        for (int v = 0; v < n; ++v) class_members[color[v]].push_back(v);
        for (int c = 0; c < classes; ++c)
            for (size_t i = 0; i < class_members[c].size(); ++i) pos_class.push_back(c);
        cur_cols.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    }

    void run() { place(0, /*tied=*/true, best_version); }

    // tied: current prefix equals the best prefix, valid as of `version`. A
    // replacement only ever happens inside an active frame's own subtree, so
    // whenever the version moved the frame is an ancestor of the new best and
    // its prefix ties again.
    void place(int k, bool tied, long long version) {
        if (k == n) {
            if (!have_best || !tied) {
                best_cols = cur_cols;
                best_order = order;
                ++best_version;
                have_best = true;
            }
            return;
        }
        const size_t base = cur_cols.size();
        for (int v : class_members[pos_class[k]]) {
            if (used[v]) continue;
            if (version != best_version) {
                tied = true;
                version = best_version;
            }
            bool child_tied = tied && have_best;
            bool worse = false;
            for (int i = 0; i < k; ++i) {
                const int val = lab[order[i]][v];
                if (child_tied) {
                    const int ref = best_cols[base + i];
                    if (val > ref) {
                        worse = true;
                        break;
                    }
                    if (val < ref) child_tied = false;
                }
                cur_cols.push_back(val);
            }
            if (worse) {
                cur_cols.resize(base);
                continue;
            }
            used[v] = true;
            order[k] = v;
            place(k + 1, child_tied || !have_best, version);
            used[v] = false;
            cur_cols.resize(base);
        }
    }
};

void push_u32(std::vector<std::uint8_t>& out, std::uint32_t x) {
    out.push_back(static_cast<std::uint8_t>(x >> 24));
    out.push_back(static_cast<std::uint8_t>(x >> 16));
    out.push_back(static_cast<std::uint8_t>(x >> 8));
    out.push_back(static_cast<std::uint8_t>(x));
}

std::uint32_t read_u32(const std::vector<std::uint8_t>& in, size_t offset) {
    return (static_cast<std::uint32_t>(in[offset]) << 24) |
           (static_cast<std::uint32_t>(in[offset + 1]) << 16) |
           (static_cast<std::uint32_t>(in[offset + 2]) << 8) |
           static_cast<std::uint32_t>(in[offset + 3]);
}

CanonicalForm encode_order(const LabeledGraph& g, const std::vector<std::vector<int>>& lab,
                           const std::vector<int>& order) {
    const int n = g.vertex_count();
    CanonicalForm form;
    push_u32(form.bytes, static_cast<std::uint32_t>(n));
    for (int k = 0; k < n; ++k)
        push_u32(form.bytes, static_cast<std::uint32_t>(g.vertices[order[k]].dim));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            push_u32(form.bytes, static_cast<std::uint32_t>(lab[order[i]][order[j]]));
    return form;
}

// Shared backtracking over dim/label-preserving bijections g -> g. Colors cut
// the candidate sets; consistency with already-mapped vertices does the rest.
void for_each_automorphism(const LabeledGraph& g, int max_vertices,
                           const std::function<void(const std::vector<int>&)>& visit) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw TooLargeError("automorphism search limited to " + std::to_string(max_vertices) +
                            " vertices, got " + std::to_string(n));
    const auto lab = label_matrix(g);
    const auto color = stable_colors(g, lab);

    std::vector<int> image(n, -1);
    std::vector<bool> taken(n, false);
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            visit(image);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (taken[w] || color[w] != color[v]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (lab[u][v] != lab[image[u]][w]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            taken[w] = true;
            extend(v + 1);
            taken[w] = false;
            image[v] = -1;
        }
    };
    extend(0);
}

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g) {
    const auto lab = label_matrix(g);
    if (g.vertex_count() == 0) {
        CanonicalForm form;
        push_u32(form.bytes, 0);
        return form;
    }
    const auto color = stable_colors(g, lab);
    CanonSearch search(g, lab, color);
    search.run();
    return encode_order(g, lab, search.best_order);
}

LabeledGraph decode_canonical(const CanonicalForm& c) {
    if (c.bytes.size() < 4 || c.bytes.size() % 4 != 0)
        throw Error("canonical form is not a sequence of 32-bit words");
    const int n = static_cast<int>(read_u32(c.bytes, 0));
    const size_t expected = 4 * (1 + static_cast<size_t>(n) + static_cast<size_t>(n) * (n - 1) / 2);
    if (c.bytes.size() != expected)
        throw Error("canonical form has " + std::to_string(c.bytes.size()) +
                    " bytes, expected " + std::to_string(expected) + " for " +
                    std::to_string(n) + " vertices");

    std::vector<int> dims(n);
    size_t off = 4;
    for (int v = 0; v < n; ++v, off += 4) dims[v] = static_cast<int>(read_u32(c.bytes, off));

    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, off += 4) {
            const int label = static_cast<int>(read_u32(c.bytes, off));
            if (label != 0) edges.push_back({i, j, label});
        }
    }
    return make_labeled_graph(dims, edges);
}

bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphisms(const LabeledGraph& g, int max_vertices) {
    std::vector<std::vector<int>> out;
    for_each_automorphism(g, max_vertices,
                          [&](const std::vector<int>& image) { out.push_back(image); });
    return out;
}

long long automorphism_group_order(const LabeledGraph& g, int max_vertices) {
    long long count = 0;
    for_each_automorphism(g, max_vertices, [&](const std::vector<int>&) { ++count; });
    return count;
}

}  // namespace atlasgraph
