#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace chordal {

/// A candidate perfect elimination ordering: a permutation of 0..n-1.
struct elimination_ordering {
    std::vector<int> order;
};

inline bool is_permutation_of_vertices(const graph& g, const std::vector<int>& order) {
    if (order.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    std::vector<char> seen(order.size(), 0);
    for (int v : order) {
        if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

/// True iff the open neighborhood of v induces a complete graph.
inline bool is_simplicial(const graph& g, int v) {
    return is_clique(g, g.neighbors(v));
}

inline std::vector<int> simplicial_vertices(const graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_simplicial(g, v)) out.push_back(v);
    return out;
}

/// Maximum cardinality search. Repeatedly numbers the vertex with the most
/// already-numbered neighbors (ties: lowest id), then reverses, so the result
/// is a perfect elimination ordering whenever the graph is chordal.
inline elimination_ordering maximum_cardinality_search(const graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    // buckets[w] holds unnumbered vertices of weight w, ordered by id.
    std::vector<std::set<int>> buckets(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v < n; ++v) buckets[0].insert(v);
    int top = 0;
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        while (buckets[static_cast<std::size_t>(top)].empty()) --top;
        int v = *buckets[static_cast<std::size_t>(top)].begin();
        buckets[static_cast<std::size_t>(top)].erase(buckets[static_cast<std::size_t>(top)].begin());
        numbered[static_cast<std::size_t>(v)] = 1;
        picked.push_back(v);
        for (int w : g.neighbors(v)) {
            if (numbered[static_cast<std::size_t>(w)]) continue;
            int& ww = weight[static_cast<std::size_t>(w)];
            buckets[static_cast<std::size_t>(ww)].erase(w);
            ++ww;
            buckets[static_cast<std::size_t>(ww)].insert(w);
            if (ww > top) top = ww;
        }
    }
    std::reverse(picked.begin(), picked.end());
    return elimination_ordering{std::move(picked)};
}

/// Literal definition: order[i] must be simplicial in the subgraph induced by
/// order[i..]. Quadratic; kept as an independent reference for the fast check.
inline bool is_perfect_elimination_ordering_naive(const graph& g, const elimination_ordering& ord) {
    if (!is_permutation_of_vertices(g, ord.order))
        throw std::invalid_argument("elimination ordering is not a permutation of the vertices");
    int n = g.vertex_count();
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> suffix(ord.order.begin() + i, ord.order.end());
        auto sub = induced_subgraph(g, suffix);
        if (!is_simplicial(sub.g, sub.relabel[static_cast<std::size_t>(ord.order[static_cast<std::size_t>(i)])]))
            return false;
    }
    return true;
}

/// Successor-check verification: for each vertex, its later neighbors minus
/// the earliest of them must be adjacent to that earliest one.
inline bool is_perfect_elimination_ordering(const graph& g, const elimination_ordering& ord) {
    if (!is_permutation_of_vertices(g, ord.order))
        throw std::invalid_argument("elimination ordering is not a permutation of the vertices");
    int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(ord.order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = ord.order[static_cast<std::size_t>(i)];
        int successor = -1;
        for (int w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > i &&
                (successor == -1 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(successor)]))
                successor = w;
        if (successor == -1) continue;
        for (int w : g.neighbors(v)) {
            if (pos[static_cast<std::size_t>(w)] <= i || w == successor) continue;
            if (!g.has_edge(successor, w)) return false;
        }
    }
    return true;
}

inline bool is_chordal(const graph& g) {
    return is_perfect_elimination_ordering(g, maximum_cardinality_search(g));
}

/// Seeded random connected chordal graph. Built by inserting vertices in id
/// order, joining each new vertex to a random nonempty clique of the current
/// graph whose target size scales with `density` (0 -> trees, 1 -> complete).
inline graph random_connected_chordal_graph(int n, double density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected_chordal_graph: n must be positive");
    density = std::clamp(density, 0.0, 1.0);
    splitmix64 rng(seed);
    graph g = graph::empty(n);
    std::vector<edge> es;
    for (int k = 1; k < n; ++k) {
        int target = std::max(1, std::min(k, static_cast<int>(density * k + 0.5)));
        std::vector<int> clique{rng.below_int(k)};
        while (static_cast<int>(clique.size()) < target) {
            std::vector<int> candidates; // common neighbors of the clique so far
            for (int c = 0; c < k; ++c) {
                if (std::find(clique.begin(), clique.end(), c) != clique.end()) continue;
                bool ok = true;
                for (int q : clique)
                    if (!g.has_edge(c, q)) { ok = false; break; }
                if (ok) candidates.push_back(c);
            }
            if (candidates.empty()) break;
            clique.push_back(candidates[static_cast<std::size_t>(rng.below_int(static_cast<int>(candidates.size())))]);
        }
        for (int q : clique) es.emplace_back(k, q);
        g = graph::from_edges(n, es);
    }
    // The construction above keeps every new vertex simplicial at insertion,
    // so the output must certify; a failure here is a bug.
    if (!is_connected(g) || !is_chordal(g))
        throw std::logic_error("random_connected_chordal_graph: generated graph failed certification");
    return g;
}

} // namespace chordal
