#include "atlasgraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "atlasgraph/cycles.hpp"

namespace atlasgraph {

namespace {

std::vector<std::tuple<int, int, int>> edge_tuples(const LabeledGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(g.edges.size());
    for (const auto& e : g.edges) out.push_back({e.u, e.v, e.label});
    return out;
}

// Attach a fresh vertex to every subset-indexed neighbor set of `parent`.
std::vector<LabeledGraph> augmentations(const LabeledGraph& parent, int dim) {
    const int k = parent.vertex_count();
    std::vector<int> dims(k + 1, dim);
    std::vector<LabeledGraph> out;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        auto edges = edge_tuples(parent);
        for (int v = 0; v < k; ++v)
            if (mask & (1u << v)) edges.push_back({v, k, 1});
        out.push_back(make_labeled_graph(dims, edges));
    }
    return out;
}

using CanonSet = std::set<std::vector<std::uint8_t>>;

// Canonical forms of one generation's children. Work is partitioned by
// parent index; per-thread sets merge under a lock, so the result does not
// depend on how the work interleaves.
CanonSet next_generation(const std::vector<LabeledGraph>& parents, int dim, int jobs) {
    CanonSet merged;
    std::mutex merged_mutex;
    std::atomic<size_t> next_parent{0};

    auto worker = [&] {
        CanonSet local;
        for (;;) {
            const size_t i = next_parent.fetch_add(1);
            if (i >= parents.size()) break;
            for (const auto& child : augmentations(parents[i], dim))
                local.insert(canonical_form(child).bytes);
        }
        std::lock_guard<std::mutex> lock(merged_mutex);
        merged.merge(local);
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return merged;
}

}  // namespace

std::vector<LabeledGraph> enumerate_connected_graphs(int p, int dim, int jobs, int max_order) {
    max_order = std::min(max_order, 12);  // class counts explode past this anyway
    if (p < 1 || p > max_order)
        throw TooLargeError("order " + std::to_string(p) + " outside supported range 1.." +
                            std::to_string(max_order));
    if (jobs < 1) jobs = 1;

    // Each generation holds the decoded canonical representative per class,
    // in canonical byte order, so the output is reproducible bit for bit.
    std::vector<LabeledGraph> generation{make_labeled_graph({dim}, {})};
    for (int size = 2; size <= p; ++size) {
        const CanonSet dedup = next_generation(generation, dim, jobs);
        generation.clear();
        for (const auto& bytes : dedup) generation.push_back(decode_canonical(CanonicalForm{bytes}));
    }
    return generation;
}

int count_connected_graphs(int p, int jobs, int max_order) {
    return static_cast<int>(enumerate_connected_graphs(p, 1, jobs, max_order).size());
}

std::vector<LabeledGraph> enumerate_labelings(const LabeledGraph& g, int min_label,
                                              int max_label) {
    if (min_label < 1 || min_label > max_label)
        throw Error("label range [" + std::to_string(min_label) + ", " +
                    std::to_string(max_label) + "] is empty or below 1");

    const int m = g.edge_count();
    const int range = max_label - min_label + 1;

    // (range)^m assignments; refuse absurd requests before they run forever.
    double space = 1.0;
    for (int i = 0; i < m; ++i) space *= range;
    if (space > double(1u << 26))
        throw TooLargeError("labeling space " + std::to_string(range) + "^" +
                            std::to_string(m) + " is too large to enumerate");

    // How each automorphism permutes edge indices.
    const auto auts = automorphisms(g);
    std::vector<std::vector<int>> edge_perms;
    for (const auto& sigma : auts) {
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) {
            int iu = sigma[g.edges[i].u];
            int iv = sigma[g.edges[i].v];
            if (iu > iv) std::swap(iu, iv);
            const auto it =
                std::lower_bound(g.edges.begin(), g.edges.end(), std::pair<int, int>{iu, iv},
                                 [](const LabeledEdge& e, const std::pair<int, int>& key) {
                                     return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                                 });
            perm[i] = static_cast<int>(it - g.edges.begin());
        }
        edge_perms.push_back(std::move(perm));
    }

    std::vector<LabeledGraph> out;
    std::vector<int> labels(m, min_label);
    std::vector<int> moved(m);
    for (;;) {
        // Keep an assignment iff it is the least of its orbit.
        bool least = true;
        for (const auto& perm : edge_perms) {
            for (int i = 0; i < m; ++i) moved[perm[i]] = labels[i];
            if (std::lexicographical_compare(moved.begin(), moved.end(), labels.begin(),
                                             labels.end())) {
                least = false;
                break;
            }
        }
        if (least) {
            std::vector<std::tuple<int, int, int>> edges;
            edges.reserve(m);
            for (int i = 0; i < m; ++i) edges.push_back({g.edges[i].u, g.edges[i].v, labels[i]});
            std::vector<int> dims;
            dims.reserve(g.vertices.size());
            for (const auto& v : g.vertices) dims.push_back(v.dim);
            out.push_back(make_labeled_graph(dims, edges));
        }
        // Odometer step.
        int pos = m - 1;
        while (pos >= 0 && labels[pos] == max_label) labels[pos--] = min_label;
        if (pos < 0) break;
        ++labels[pos];
    }
    return out;
}

std::vector<CatalogEntry> build_catalog(int p, int max_label, int dim, int jobs, int max_order) {
    if (p != 1 && max_label < 2)
        throw Error("catalog labels start at 2; max_label " + std::to_string(max_label) +
                    " admits none");

    std::vector<CatalogEntry> entries;
    for (const auto& base : enumerate_connected_graphs(p, dim, jobs, max_order)) {
        const auto labelings =
            base.edge_count() == 0 ? std::vector<LabeledGraph>{base}
                                   : enumerate_labelings(base, 2, max_label);
        for (const auto& g : labelings) {
            CatalogEntry entry;
            entry.canonical = canonical_form(g);
            entry.order = p;
            entry.dim = dim;
            entry.label_bound = 0;
            for (const auto& e : g.edges) entry.label_bound = std::max(entry.label_bound, e.label);
            entry.labeled_rank = labeled_cycle_rank(g);
            entry.report = classify(g);
            entries.push_back(std::move(entry));
        }
    }
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return a.canonical.bytes < b.canonical.bytes;
    });
    return entries;
}

}  // namespace atlasgraph
