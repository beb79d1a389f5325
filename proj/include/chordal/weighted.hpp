#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "erasure.hpp"
#include "errors.hpp"
#include "exposure.hpp"
#include "graph.hpp"
#include "metric.hpp"
#include "rational.hpp"

namespace chordal {

namespace detail {

inline std::size_t pair_index(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    std::size_t uu = static_cast<std::size_t>(u);
    std::size_t nn = static_cast<std::size_t>(n);
    return uu * nn - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

/// Word-packed adjacency matrix for the erasure engine's hot loops.
struct bitset_graph {
    int n = 0;
    int words = 0;
    std::size_t edges = 0;
    std::vector<std::uint64_t> rows;

    explicit bitset_graph(const graph& g)
        : n(g.vertex_count()),
          words((g.vertex_count() + 63) / 64),
          edges(g.edge_count()),
          rows(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>((g.vertex_count() + 63) / 64), 0) {
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) set_bit(row(v), w);
    }

    std::uint64_t* row(int v) { return rows.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words); }
    const std::uint64_t* row(int v) const {
        return rows.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words);
    }

    static void set_bit(std::uint64_t* r, int i) { r[i >> 6] |= std::uint64_t{1} << (i & 63); }
    static void clear_bit(std::uint64_t* r, int i) { r[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    static bool test_bit(const std::uint64_t* r, int i) { return (r[i >> 6] >> (i & 63)) & 1; }

    bool has(int u, int v) const { return test_bit(row(u), v); }

    void remove(int u, int v) {
        clear_bit(row(u), v);
        clear_bit(row(v), u);
        --edges;
    }

    /// True iff e.v is reachable from e.u without crossing e.
    bool connected_avoiding(const edge& e) const {
        std::vector<std::uint64_t> seen(static_cast<std::size_t>(words), 0);
        std::vector<int> stack{e.u};
        set_bit(seen.data(), e.u);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const std::uint64_t* r = row(v);
            for (int w = 0; w < words; ++w) {
                std::uint64_t fresh = r[w] & ~seen[static_cast<std::size_t>(w)];
                while (fresh) {
                    int bit = w * 64 + std::countr_zero(fresh);
                    fresh &= fresh - 1;
                    if ((v == e.u && bit == e.v) || (v == e.v && bit == e.u)) continue;
                    set_bit(seen.data(), bit);
                    if (bit == e.v) return true;
                    stack.push_back(bit);
                }
            }
        }
        return test_bit(seen.data(), e.v);
    }

    graph to_graph() const {
        std::vector<edge> es;
        es.reserve(edges);
        for (int u = 0; u < n; ++u) {
            const std::uint64_t* r = row(u);
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = r[w];
                while (bits) {
                    int v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (v > u) es.emplace_back(u, v);
                }
            }
        }
        return graph::from_edges(n, es);
    }
};

enum : std::int8_t { cls_facet = 0, cls_exposed = 1, cls_shared = 2, cls_absent = 3 };

/// Vertex sides of the cut induced by removing e from the tree: 1 on e.u's
/// side, 0 on e.v's.
inline std::vector<char> cut_side(const spanning_tree& t, const edge& e, int n) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const edge& f : t.edges) {
        if (f == e) continue;
        adj[static_cast<std::size_t>(f.u)].push_back(f.v);
        adj[static_cast<std::size_t>(f.v)].push_back(f.u);
    }
    std::vector<char> side(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{e.u};
    side[static_cast<std::size_t>(e.u)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!side[static_cast<std::size_t>(w)]) {
                side[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return side;
}

/// Maintains the exposure class of every edge of a shrinking graph together
/// with a priority queue of exposed edges ordered by (weight desc, edge asc).
/// After removing uv, only edges at u, at v, or with both endpoints in the
/// old common neighborhood of u and v can change class, so incremental
/// maintenance re-examines exactly that set.
class erasure_engine {
public:
    erasure_engine(const metric_space& m, const graph& start) : bits_(start), n_(start.vertex_count()) {
        if (m.point_count() != n_)
            throw std::invalid_argument("erasure_engine: metric and graph vertex sets differ");
        std::size_t pair_count = static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) - 1) / 2;
        // Rank pairs once: heavier first, lexicographic among equals.
        std::vector<std::size_t> order(pair_count);
        for (std::size_t i = 0; i < pair_count; ++i) order[i] = i;
        std::vector<rational> weights(pair_count);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) weights[pair_index(u, v, n_)] = m.weight(u, v);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (weights[a] != weights[b]) return weights[a] > weights[b];
            return a < b; // pair_index order is lexicographic on (u,v)
        });
        rank_of_pair_.assign(pair_count, 0);
        pair_of_rank_ = order;
        weight_class_.assign(pair_count, 0);
        int wc = 0;
        for (std::size_t r = 0; r < pair_count; ++r) {
            if (r > 0 && weights[order[r]] != weights[order[r - 1]]) ++wc;
            rank_of_pair_[order[r]] = r;
            weight_class_[r] = wc;
        }
        pair_u_.resize(pair_count);
        pair_v_.resize(pair_count);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                pair_u_[pair_index(u, v, n_)] = u;
                pair_v_[pair_index(u, v, n_)] = v;
            }
        cls_.assign(pair_count, cls_absent);
        scratch_.assign(static_cast<std::size_t>(bits_.words), 0);
        full_rescan();
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return bits_.edges; }
    std::size_t exposed_count() const { return exposed_ranks_.size(); }
    const bitset_graph& bits() const { return bits_; }

    edge edge_of_rank(std::size_t r) const {
        return edge(pair_u_[pair_of_rank_[r]], pair_v_[pair_of_rank_[r]]);
    }

    int weight_class_of_rank(std::size_t r) const { return weight_class_[r]; }

    /// Rank of the heaviest exposed edge (lexicographic among ties).
    std::optional<std::size_t> best_exposed_rank() const {
        if (exposed_ranks_.empty()) return std::nullopt;
        return *exposed_ranks_.begin();
    }

    const std::set<std::size_t>& exposed_ranks() const { return exposed_ranks_; }

    std::int8_t edge_state(int u, int v) const { return cls_[pair_index(u, v, n_)]; }

    /// Removes the edge and restores classification, incrementally or by a
    /// full rescan of all remaining edges.
    void remove_edge(const edge& e, bool incremental) {
        std::size_t idx = pair_index(e.u, e.v, n_);
        assert(cls_[idx] != cls_absent);
        std::vector<int> adj_u = neighbors_of(e.u);
        std::vector<int> adj_v = neighbors_of(e.v);
        std::vector<int> common;
        collect_common(e.u, e.v, common);
        set_class(idx, cls_absent);
        bits_.remove(e.u, e.v);
        if (!incremental) {
            full_rescan();
            return;
        }
        for (int x : adj_u)
            if (x != e.v) reclassify(e.u, x);
        for (int x : adj_v)
            if (x != e.u) reclassify(e.v, x);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (bits_.has(common[i], common[j])) reclassify(common[i], common[j]);
    }

    void full_rescan() {
        exposed_ranks_.clear();
        for (std::size_t idx = 0; idx < cls_.size(); ++idx) {
            int u = pair_u_[idx];
            int v = pair_v_[idx];
            if (!bits_.has(u, v)) {
                cls_[idx] = cls_absent;
                continue;
            }
            cls_[idx] = classify(u, v);
            if (cls_[idx] == cls_exposed) exposed_ranks_.insert(rank_of_pair_[idx]);
        }
    }

private:
    bitset_graph bits_;
    int n_;
    std::vector<std::size_t> rank_of_pair_;
    std::vector<std::size_t> pair_of_rank_;
    std::vector<int> weight_class_;
    std::vector<int> pair_u_, pair_v_;
    std::vector<std::int8_t> cls_;
    std::set<std::size_t> exposed_ranks_;
    std::vector<std::uint64_t> scratch_;

    std::vector<int> neighbors_of(int v) const {
        std::vector<int> out;
        const std::uint64_t* r = bits_.row(v);
        for (int w = 0; w < bits_.words; ++w) {
            std::uint64_t b = r[w];
            while (b) {
                out.push_back(w * 64 + std::countr_zero(b));
                b &= b - 1;
            }
        }
        return out;
    }

    void collect_common(int u, int v, std::vector<int>& out) {
        const std::uint64_t* ru = bits_.row(u);
        const std::uint64_t* rv = bits_.row(v);
        out.clear();
        for (int w = 0; w < bits_.words; ++w) {
            std::uint64_t b = ru[w] & rv[w];
            while (b) {
                out.push_back(w * 64 + std::countr_zero(b));
                b &= b - 1;
            }
        }
    }

    std::int8_t classify(int u, int v) {
        const std::uint64_t* ru = bits_.row(u);
        const std::uint64_t* rv = bits_.row(v);
        std::uint64_t any = 0;
        for (int w = 0; w < bits_.words; ++w) {
            scratch_[static_cast<std::size_t>(w)] = ru[w] & rv[w];
            any |= scratch_[static_cast<std::size_t>(w)];
        }
        if (!any) return cls_facet;
        // Common neighborhood is a clique iff each member is adjacent to all
        // the others: C & ~adj(s) may contain only s itself.
        for (int w = 0; w < bits_.words; ++w) {
            std::uint64_t b = scratch_[static_cast<std::size_t>(w)];
            while (b) {
                int s = w * 64 + std::countr_zero(b);
                b &= b - 1;
                const std::uint64_t* rs = bits_.row(s);
                for (int w2 = 0; w2 < bits_.words; ++w2) {
                    std::uint64_t outside = scratch_[static_cast<std::size_t>(w2)] & ~rs[w2];
                    if (w2 == w) outside &= ~(std::uint64_t{1} << (s & 63));
                    if (outside) return cls_shared;
                }
            }
        }
        return cls_exposed;
    }

    void reclassify(int u, int v) {
        std::size_t idx = pair_index(u, v, n_);
        set_class(idx, classify(u, v));
    }

    void set_class(std::size_t idx, std::int8_t next) {
        std::int8_t prev = cls_[idx];
        if (prev == next) return;
        if (prev == cls_exposed) exposed_ranks_.erase(rank_of_pair_[idx]);
        if (next == cls_exposed) exposed_ranks_.insert(rank_of_pair_[idx]);
        cls_[idx] = next;
    }
};

} // namespace detail

/// Exposed-set bookkeeping strategy for the greedy weighted erasure.
enum class exposed_maintenance {
    incremental, ///< re-examine only the neighborhood affected by the removal
    full_rescan  ///< reclassify every remaining edge after each removal
};

/// One d-erasure: removes an exposed edge of maximum weight (lexicographically
/// smallest among ties) and returns the new graph with the erased edge.
inline std::pair<graph, edge> d_erasure_step(const metric_space& m, const graph& g) {
    if (m.point_count() != g.vertex_count())
        throw std::invalid_argument("d_erasure_step: metric and graph vertex sets differ");
    std::optional<edge> best;
    for (const edge& e : exposed_edges(g))
        if (!best || m.weight(e) > m.weight(*best)) best = e;
    if (!best) throw no_exposed_edge_error();
    return {g.without_edge(*best), *best};
}

struct d_erasure_result {
    spanning_tree tree;
    erasure_trace trace;
    std::vector<std::size_t> exposed_counts; ///< exposed edges before each erasure
};

/// Maximal sequence of d-erasures from the complete graph; the surviving tree
/// is a minimum spanning tree.
inline d_erasure_result d_erasure_mst(const metric_space& m,
                                      exposed_maintenance mode = exposed_maintenance::incremental) {
    int n = m.point_count();
    detail::erasure_engine engine(m, graph::complete(n));
    erasure_trace trace{graph::complete(n), {}};
    std::vector<std::size_t> counts;
    while (auto best = engine.best_exposed_rank()) {
        edge e = engine.edge_of_rank(*best);
        counts.push_back(engine.exposed_count());
        engine.remove_edge(e, mode == exposed_maintenance::incremental);
        trace.erased.push_back(e);
    }
    assert(engine.edge_count() == static_cast<std::size_t>(n) - 1);
    graph final = engine.bits().to_graph();
    spanning_tree tree = spanning_tree::of(m, final.edges());
    return {std::move(tree), std::move(trace), std::move(counts)};
}

struct reverse_delete_result {
    spanning_tree tree;
    graph initial;
    std::vector<edge> removed;               ///< in removal order (weights descending)
    std::vector<std::size_t> exposed_counts; ///< exposed edges before each removal
};

/// Kruskal's second algorithm: repeatedly remove the heaviest edge that does
/// not disconnect the graph (lexicographic tie-break), until a tree remains.
inline reverse_delete_result reverse_delete_mst(const metric_space& m) {
    int n = m.point_count();
    detail::erasure_engine engine(m, graph::complete(n));
    std::vector<edge> removed;
    std::vector<std::size_t> counts;
    std::size_t pair_count = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    for (std::size_t r = 0; r < pair_count; ++r) {
        if (engine.edge_count() == static_cast<std::size_t>(n) - 1) break;
        edge e = engine.edge_of_rank(r);
        if (engine.edge_state(e.u, e.v) == detail::cls_absent) continue;
        if (!engine.bits().connected_avoiding(e)) continue; // bridge stays
        counts.push_back(engine.exposed_count());
        engine.remove_edge(e, true);
        removed.push_back(e);
    }
    graph final = engine.bits().to_graph();
    spanning_tree tree = spanning_tree::of(m, final.edges());
    return {std::move(tree), graph::complete(n), std::move(removed), std::move(counts)};
}

/// Maximal d-erasure sequence whose final graph is exactly the given minimum
/// spanning tree. At every step a maximum-weight exposed edge outside the
/// target tree is erased; an equal-weight exposed edge crossing the tree cut
/// is the fallback when every maximum-weight exposed edge lies inside the
/// tree.
inline erasure_trace d_erasure_toward(const metric_space& m, const spanning_tree& target) {
    int n = m.point_count();
    spanning_tree checked = spanning_tree::of(m, target.edges); // revalidates structure and weight
    if (reverse_delete_mst(m).tree.weight != checked.weight) throw not_minimum_error();

    std::vector<char> in_target(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto target_has = [&](const edge& e) {
        return in_target[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)] != 0;
    };
    for (const edge& e : target.edges)
        in_target[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)] = 1;

    detail::erasure_engine engine(m, graph::complete(n));
    erasure_trace trace{graph::complete(n), {}};
    while (engine.edge_count() > static_cast<std::size_t>(n) - 1) {
        auto best = engine.best_exposed_rank();
        if (!best)
            throw internal_contradiction_error("d_erasure_toward: no exposed edge before reaching the tree");
        int best_class = engine.weight_class_of_rank(*best);
        std::optional<edge> pick;
        for (std::size_t r : engine.exposed_ranks()) {
            if (engine.weight_class_of_rank(r) != best_class) break;
            edge e = engine.edge_of_rank(r);
            if (!target_has(e)) { pick = e; break; }
        }
        if (!pick) {
            // Every maximum-weight exposed edge lies in the target: look for
            // an equal-weight exposed edge across the cut that the heaviest
            // such tree edge spans.
            edge xy = engine.edge_of_rank(*best);
            std::vector<char> side = detail::cut_side(target, xy, n);
            for (std::size_t r : engine.exposed_ranks()) {
                if (engine.weight_class_of_rank(r) != best_class) break;
                edge e = engine.edge_of_rank(r);
                if (e == xy || target_has(e)) continue;
                if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) { pick = e; break; }
            }
            if (!pick)
                throw internal_contradiction_error(
                    "d_erasure_toward: no equal-weight exposed edge crosses the tree cut");
        }
        engine.remove_edge(*pick, true);
        trace.erased.push_back(*pick);
    }
    if (!(engine.bits().to_graph() == graph::from_edges(n, target.edges)))
        throw internal_contradiction_error("d_erasure_toward: terminated at a different tree");
    return trace;
}

/// Weight system under which the given erasure sequence is also a d-erasure
/// sequence: surviving edges get weight 1, the j-th erased edge 2 - j*eps.
/// The trace must start at the complete graph so every pair receives a
/// weight.
inline metric_space metric_from_erasure_trace(const erasure_trace& t, const rational& eps) {
    trace_verdict verdict = verify_trace(t);
    if (!verdict) throw invalid_trace_error("invalid trace: " + verdict.reason);
    if (!t.initial.is_complete())
        throw invalid_trace_error("invalid trace: initial graph must be complete");
    long m = static_cast<long>(t.erased.size());
    if (eps.sign() <= 0) throw epsilon_range_error("eps must be positive");
    if (m >= 2) {
        if (eps >= rational(1, m - 1))
            throw epsilon_range_error("eps must be below 1/" + std::to_string(m - 1));
    } else if (eps > rational(1)) {
        throw epsilon_range_error("eps must be at most 1");
    }
    int n = t.initial.vertex_count();
    std::vector<std::pair<edge, rational>> weights;
    graph final = t.final_graph();
    for (const edge& e : final.edges()) weights.emplace_back(e, rational(1));
    for (std::size_t j = 0; j < t.erased.size(); ++j)
        weights.emplace_back(t.erased[j], rational(2) - rational(static_cast<long>(j)) * eps);
    return metric_space::from_pairs(n, weights);
}

} // namespace chordal
