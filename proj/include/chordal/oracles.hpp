#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "metric.hpp"
#include "rational.hpp"

// Ground-truth implementations for property tests and the CLI's --oracle
// mode. These deliberately share no algorithmic machinery with the production
// code: adjacency is re-derived as a bitmask matrix and every question is
// answered by exhaustive search.
namespace chordal::oracle {

inline constexpr int default_clique_bound = 16;
inline constexpr int default_mst_bound = 8;

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const graph& g, int bound, const char* who) {
    int n = g.vertex_count();
    if (n > bound)
        throw size_limit_error(std::string(who) + ": graph has " + std::to_string(n) +
                               " vertices, oracle limit is " + std::to_string(bound));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return adj;
}

inline void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          const std::vector<std::uint64_t>& adj,
                          std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot on the candidate with the most candidate-neighbors.
    std::uint64_t px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (std::uint64_t s = px; s; s &= s - 1) {
        int v = std::countr_zero(s);
        int cover = std::popcount(p & adj[static_cast<std::size_t>(v)]);
        if (cover > best) {
            best = cover;
            pivot = v;
        }
    }
    std::uint64_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
    for (std::uint64_t s = candidates; s; s &= s - 1) {
        int v = std::countr_zero(s);
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)], adj, out);
        p &= ~bit;
        x |= bit;
    }
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (std::uint64_t s = mask; s; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
}

inline bool mask_connected(std::uint64_t mask, const std::vector<std::uint64_t>& adj) {
    if (mask == 0) return false;
    std::uint64_t seen = mask & (~mask + 1); // lowest bit
    for (;;) {
        std::uint64_t grow = seen;
        for (std::uint64_t s = seen; s; s &= s - 1)
            grow |= adj[static_cast<std::size_t>(std::countr_zero(s))] & mask;
        if (grow == seen) break;
        seen = grow;
    }
    return seen == mask;
}

} // namespace detail

/// All inclusion-maximal cliques, each sorted, the list in lexicographic
/// order. Bron-Kerbosch with pivoting over a bitmask adjacency matrix.
inline std::vector<std::vector<int>> enumerate_maximal_cliques(const graph& g,
                                                               int bound = default_clique_bound) {
    auto adj = detail::adjacency_masks(g, std::min(bound, 63), "enumerate_maximal_cliques");
    int n = g.vertex_count();
    std::vector<std::uint64_t> masks;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    detail::bron_kerbosch(0, all, 0, adj, masks);
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(detail::mask_to_vertices(m));
    std::sort(out.begin(), out.end());
    return out;
}

/// Definitional exposure test: e lies in exactly one maximal clique and that
/// clique has at least three vertices.
inline bool naive_exposed(const graph& g, const edge& e, int bound = default_clique_bound) {
    if (!g.has_edge(e)) throw std::invalid_argument("naive_exposed: no such edge " + to_string(e));
    int containing = 0;
    std::size_t clique_size = 0;
    for (const auto& clique : enumerate_maximal_cliques(g, bound)) {
        bool has_u = std::binary_search(clique.begin(), clique.end(), e.u);
        bool has_v = std::binary_search(clique.begin(), clique.end(), e.v);
        if (has_u && has_v) {
            ++containing;
            clique_size = clique.size();
        }
    }
    return containing == 1 && clique_size >= 3;
}

/// First induced cycle of length >= 4 in subset-scan order, listed in walk
/// order starting at its lowest vertex, or nothing when the graph is chordal.
inline std::optional<std::vector<int>> find_induced_long_cycle(const graph& g,
                                                               int bound = default_clique_bound) {
    auto adj = detail::adjacency_masks(g, std::min(bound, 63), "find_induced_long_cycle");
    int n = g.vertex_count();
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) < 4) continue;
        bool all_degree_two = true;
        for (std::uint64_t s = mask; s; s &= s - 1) {
            int v = std::countr_zero(s);
            if (std::popcount(adj[static_cast<std::size_t>(v)] & mask) != 2) {
                all_degree_two = false;
                break;
            }
        }
        if (!all_degree_two || !detail::mask_connected(mask, adj)) continue;
        // Walk the cycle from its lowest vertex toward its lowest neighbor.
        std::vector<int> walk;
        int start = std::countr_zero(mask);
        int prev = -1;
        int cur = start;
        do {
            walk.push_back(cur);
            std::uint64_t nbrs = adj[static_cast<std::size_t>(cur)] & mask;
            int next = -1;
            for (std::uint64_t s = nbrs; s; s &= s - 1) {
                int w = std::countr_zero(s);
                if (w != prev) { next = w; break; }
            }
            prev = cur;
            cur = next;
        } while (cur != start);
        return walk;
    }
    return std::nullopt;
}

/// True iff no vertex subset induces a cycle of length four or more.
inline bool brute_force_chordal(const graph& g, int bound = default_clique_bound) {
    return !find_induced_long_cycle(g, bound).has_value();
}

namespace detail {

/// Decodes a Pruefer sequence over 0..n-1 into the edges of the labeled tree.
inline void decode_pruefer(const std::vector<int>& seq, int n, std::vector<int>& degree,
                           std::vector<std::pair<int, int>>& edges_out) {
    degree.assign(static_cast<std::size_t>(n), 1);
    for (int a : seq) ++degree[static_cast<std::size_t>(a)];
    edges_out.clear();
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
        edges_out.emplace_back(leaf, a);
        if (--degree[static_cast<std::size_t>(a)] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (ptr < n && degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges_out.emplace_back(leaf, n - 1);
}

struct mst_scan {
    rational min_weight;
    std::uint64_t tree_count = 0;     ///< trees attaining the minimum
    std::uint64_t visited_count = 0;  ///< all spanning trees visited
    std::vector<std::vector<std::pair<int, int>>> argmins; ///< filled when collecting
};

/// Visits every labeled tree on n vertices via its Pruefer sequence and
/// tracks the minimum total weight. Exact arithmetic throughout: int64 on
/// rescaled integer numerators when they fit, rationals otherwise.
inline mst_scan scan_all_spanning_trees(const metric_space& m, bool collect) {
    int n = m.point_count();
    mst_scan scan;
    if (n == 1) {
        scan.min_weight = rational(0);
        scan.tree_count = 1;
        scan.visited_count = 1;
        if (collect) scan.argmins.emplace_back();
        return scan;
    }

    std::vector<rational> w;
    w.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) w.push_back(m.weight(u, v));

    // Rescale to a shared denominator for an integer fast path.
    bool fits = true;
    long lcm = 1;
    for (const rational& x : w) {
        if (!x.fits_long()) { fits = false; break; }
        long den = x.denominator_long();
        long g = std::gcd(lcm, den);
        if (lcm / g > std::numeric_limits<long>::max() / den) { fits = false; break; }
        lcm = lcm / g * den;
    }
    std::vector<long> scaled;
    if (fits) {
        for (const rational& x : w) {
            long num = x.numerator_long();
            long factor = lcm / x.denominator_long();
            if (num != 0 && std::abs(num) > std::numeric_limits<long>::max() / factor / n) {
                fits = false;
                break;
            }
            scaled.push_back(num * factor);
        }
    }

    auto pair_idx = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) -
               static_cast<std::size_t>(u) * (static_cast<std::size_t>(u) + 1) / 2 +
               static_cast<std::size_t>(v - u - 1);
    };

    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    std::vector<int> degree;
    std::vector<std::pair<int, int>> edges;
    bool have_min = false;
    long best_scaled = 0;
    rational best_exact;
    for (;;) {
        decode_pruefer(seq, n, degree, edges);
        ++scan.visited_count;
        bool is_new_min = false;
        bool ties_min = false;
        if (fits) {
            long total = 0;
            for (const auto& [a, b] : edges) total += scaled[pair_idx(a, b)];
            if (!have_min || total < best_scaled) {
                best_scaled = total;
                is_new_min = true;
            } else if (total == best_scaled) {
                ties_min = true;
            }
        } else {
            rational total;
            for (const auto& [a, b] : edges) total += w[pair_idx(a, b)];
            if (!have_min || total < best_exact) {
                best_exact = total;
                is_new_min = true;
            } else if (total == best_exact) {
                ties_min = true;
            }
        }
        if (is_new_min) {
            have_min = true;
            scan.tree_count = 1;
            if (collect) {
                scan.argmins.clear();
                scan.argmins.push_back(edges);
            }
        } else if (ties_min) {
            ++scan.tree_count;
            if (collect) scan.argmins.push_back(edges);
        }
        // Odometer step over the n^(n-2) sequences.
        std::size_t pos = seq.size();
        while (pos > 0 && seq[pos - 1] == n - 1) seq[--pos] = 0;
        if (pos == 0) break;
        ++seq[pos - 1];
    }
    if (fits) {
        scan.min_weight = rational(best_scaled, lcm);
    } else {
        scan.min_weight = best_exact;
    }
    return scan;
}

} // namespace detail

/// Minimum spanning weight by visiting every one of the n^(n-2) labeled
/// spanning trees of the complete graph on the metric's points.
inline rational minimum_spanning_weight(const metric_space& m, int bound = default_mst_bound) {
    if (m.point_count() > bound)
        throw size_limit_error("minimum_spanning_weight: " + std::to_string(m.point_count()) +
                               " points, oracle limit is " + std::to_string(bound));
    return detail::scan_all_spanning_trees(m, false).min_weight;
}

/// Every minimum spanning tree, in canonical order (edge lists sorted, trees
/// sorted lexicographically).
inline std::vector<spanning_tree> enumerate_all_msts(const metric_space& m,
                                                     int bound = default_mst_bound) {
    if (m.point_count() > bound)
        throw size_limit_error("enumerate_all_msts: " + std::to_string(m.point_count()) +
                               " points, oracle limit is " + std::to_string(bound));
    detail::mst_scan scan = detail::scan_all_spanning_trees(m, true);
    std::vector<std::vector<edge>> edge_lists;
    edge_lists.reserve(scan.argmins.size());
    for (const auto& raw : scan.argmins) {
        std::vector<edge> es;
        es.reserve(raw.size());
        for (const auto& [a, b] : raw) es.emplace_back(a, b);
        std::sort(es.begin(), es.end());
        edge_lists.push_back(std::move(es));
    }
    std::sort(edge_lists.begin(), edge_lists.end());
    std::vector<spanning_tree> out;
    out.reserve(edge_lists.size());
    for (auto& es : edge_lists) out.push_back(spanning_tree::of(m, std::move(es)));
    return out;
}

} // namespace chordal::oracle
