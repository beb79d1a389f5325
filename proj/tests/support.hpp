#pragma once

#include <cstdint>
#include <vector>

#include "chordal/chordality.hpp"
#include "chordal/graph.hpp"
#include "chordal/metric.hpp"
#include "chordal/oracles.hpp"
#include "chordal/rng.hpp"

// Shared test fixtures: small named graphs, mask-indexed exhaustive
// enumeration, and seeded random samplers.
namespace support {

using chordal::edge;
using chordal::graph;

inline std::vector<edge> all_pairs(int n) {
    std::vector<edge> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

/// Graph on n vertices whose edge set is the bitmask over the canonical pair
/// list; mask ranges over [0, 2^binom(n,2)).
inline graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<edge> pairs = all_pairs(n);
    std::vector<edge> chosen;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1) chosen.push_back(pairs[k]);
    return graph::from_edges(n, chosen);
}

inline graph path_graph(int n) {
    std::vector<edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return graph::from_edges(n, es);
}

inline graph cycle_graph(int n) {
    std::vector<edge> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return graph::from_edges(n, es);
}

inline graph random_graph(int n, double edge_probability, chordal::splitmix64& rng) {
    std::vector<edge> es;
    for (const edge& e : all_pairs(n))
        if (rng.unit() < edge_probability) es.push_back(e);
    return graph::from_edges(n, es);
}

inline graph random_connected_graph(int n, double edge_probability, chordal::splitmix64& rng) {
    for (;;) {
        graph g = random_graph(n, edge_probability, rng);
        if (chordal::is_connected(g)) return g;
    }
}

/// Connected graph that the brute-force oracle certifies as non-chordal.
inline graph random_connected_nonchordal(int n, chordal::splitmix64& rng) {
    for (;;) {
        graph g = random_connected_graph(n, 0.45, rng);
        if (!chordal::oracle::brute_force_chordal(g)) return g;
    }
}

/// Four points around a unit square under the l1 metric: sides weigh 1, the
/// two diameters weigh 2.
inline chordal::metric_space square_metric() {
    using chordal::rational;
    std::vector<std::pair<edge, rational>> w;
    w.emplace_back(edge(0, 1), rational(1));
    w.emplace_back(edge(1, 2), rational(1));
    w.emplace_back(edge(2, 3), rational(1));
    w.emplace_back(edge(0, 3), rational(1));
    w.emplace_back(edge(0, 2), rational(2));
    w.emplace_back(edge(1, 3), rational(2));
    return chordal::metric_space::from_pairs(4, w);
}

} // namespace support
