#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "chordality.hpp"
#include "errors.hpp"
#include "exposure.hpp"
#include "graph.hpp"

namespace chordal {

/// An initial graph plus the ordered list of erased edges. Prefix graph j is
/// the initial graph minus erased[0..j); a trace is valid when every erased
/// edge was exposed at its step and every prefix stays connected and chordal.
struct erasure_trace {
    graph initial;
    std::vector<edge> erased;

    std::size_t length() const { return erased.size(); }

    /// Graph after the first `steps` erasures.
    graph prefix(std::size_t steps) const {
        graph g = initial;
        for (std::size_t j = 0; j < steps; ++j) g = g.without_edge(erased[j]);
        return g;
    }

    graph final_graph() const { return prefix(erased.size()); }
};

/// Removes an exposed edge. Connectivity and chordality of the input are
/// preserved by construction, so only exposure is checked.
inline graph erase(const graph& g, const edge& e) {
    edge_class cls = classify_edge(g, e);
    if (cls != edge_class::exposed) throw not_exposed_error(e, cls);
    return g.without_edge(e);
}

/// Adds one edge to a non-complete connected chordal graph such that the new
/// edge is exposed in the result and the result stays chordal. The edge joins
/// ord[l] to ord[j], where ord is the maximum cardinality search ordering, l
/// is the last position whose suffix subgraph is not complete, and j is the
/// first later position not yet adjacent to ord[l].
inline std::pair<graph, edge> extension_step(const graph& g) {
    if (!is_connected(g)) throw not_connected_error();
    elimination_ordering ord = maximum_cardinality_search(g);
    if (!is_perfect_elimination_ordering(g, ord)) throw not_chordal_error();
    if (g.is_complete()) throw already_complete_error();

    int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(ord.order[static_cast<std::size_t>(i)])] = i;

    // Suffix subgraphs are nested, so completeness is monotone from the back:
    // walk forward from the end while each new front vertex sees the whole
    // suffix behind it.
    int first_complete = n - 1;
    while (first_complete > 0) {
        int v = ord.order[static_cast<std::size_t>(first_complete - 1)];
        int later = 0;
        for (int w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] >= first_complete) ++later;
        if (later != n - first_complete) break;
        --first_complete;
    }
    int l = first_complete - 1; // suffix at l is the first non-complete one
    assert(l >= 0);             // g is not complete, so some suffix is not

    int vl = ord.order[static_cast<std::size_t>(l)];
    int j = -1;
    for (int i = l + 1; i < n; ++i)
        if (!g.has_edge(vl, ord.order[static_cast<std::size_t>(i)])) { j = i; break; }
    assert(j != -1);

    edge added(vl, ord.order[static_cast<std::size_t>(j)]);
    graph result = g.with_edge(added);
    // The old ordering must still eliminate the extended graph, and the new
    // edge must be exposed in it.
    assert(is_perfect_elimination_ordering(result, ord));
    assert(is_exposed(result, added));
    return {result, added};
}

/// Erasure sequence from the complete graph down to H. Exists iff H is
/// connected and chordal; built by extending H edge by edge up to the
/// complete graph and reversing the additions.
inline erasure_trace erasure_sequence_from_complete(const graph& h) {
    if (!is_connected(h)) throw not_connected_error();
    if (!is_chordal(h)) throw not_chordal_error();
    std::vector<edge> added;
    graph g = h;
    while (!g.is_complete()) {
        auto [next, e] = extension_step(g);
        g = next;
        added.push_back(e);
    }
    erasure_trace t{graph::complete(h.vertex_count()), {}};
    t.erased.assign(added.rbegin(), added.rend());
    return t;
}

/// Picks the lexicographically smallest exposed edge.
struct lexicographic_picker {
    edge operator()(const graph&, const std::vector<edge>& exposed) const {
        return exposed.front();
    }
};

/// Erases picker-selected exposed edges until none remain. Starting from a
/// connected chordal graph this terminates at a spanning tree.
template <typename Picker = lexicographic_picker>
erasure_trace erase_to_tree(const graph& g, Picker picker = {}) {
    if (!is_connected(g)) throw not_connected_error();
    if (!is_chordal(g)) throw not_chordal_error();
    erasure_trace t{g, {}};
    graph current = g;
    for (;;) {
        std::vector<edge> exposed = exposed_edges(current);
        if (exposed.empty()) break;
        edge e = picker(current, exposed);
        current = erase(current, e);
        t.erased.push_back(e);
    }
    return t;
}

struct trace_verdict {
    bool ok = true;
    std::size_t failed_step = 0; ///< first offending step when !ok
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Replays a trace and reports the first violated step: the erased edge must
/// be present and exposed, and every prefix graph (the initial one included)
/// must be connected and chordal.
inline trace_verdict verify_trace(const erasure_trace& t) {
    auto fail = [](std::size_t step, std::string reason) {
        return trace_verdict{false, step, std::move(reason)};
    };
    graph g = t.initial;
    if (!is_connected(g)) return fail(0, "initial graph is not connected");
    if (!is_chordal(g)) return fail(0, "initial graph is not chordal");
    for (std::size_t j = 0; j < t.erased.size(); ++j) {
        const edge& e = t.erased[j];
        if (!g.has_vertex(e.v) || !g.has_edge(e))
            return fail(j, "edge " + to_string(e) + " is not present at step " + std::to_string(j));
        edge_class cls = classify_edge(g, e);
        if (cls != edge_class::exposed)
            return fail(j, "edge " + to_string(e) + " is " + std::string(to_string(cls)) +
                               ", not exposed, at step " + std::to_string(j));
        g = g.without_edge(e);
        if (!is_connected(g))
            return fail(j, "graph disconnected after step " + std::to_string(j));
        if (!is_chordal(g))
            return fail(j, "graph not chordal after step " + std::to_string(j));
    }
    return {};
}

} // namespace chordal
