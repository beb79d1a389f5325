#pragma once

#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "chordality.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace chordal {

/// Edge classes are mutually exclusive and exhaustive:
///  - facet:   the edge is itself a maximal clique (no common neighbor);
///  - exposed: common neighborhood is a nonempty clique, i.e. the edge lies
///             properly inside exactly one maximal clique;
///  - shared:  common neighborhood is nonempty but not a clique, i.e. the
///             edge lies in two or more maximal cliques.
///
/// Exposure is weaker than the classical simplicial-edge condition, which
/// asks the union rather than the intersection of the endpoint neighborhoods
/// to induce a clique; simplicial edges are not treated here.
enum class edge_class { facet, exposed, shared };

inline const char* to_string(edge_class c) {
    switch (c) {
        case edge_class::facet: return "facet";
        case edge_class::exposed: return "exposed";
        case edge_class::shared: return "shared";
    }
    return "?";
}

class not_exposed_error : public error {
public:
    not_exposed_error(const edge& e, edge_class actual)
        : error("edge " + chordal::to_string(e) + " is not exposed (" +
                chordal::to_string(actual) + ")"),
          cls(actual) {}
    edge_class cls;
};

inline edge_class classify_edge(const graph& g, const edge& e) {
    if (!g.has_edge(e)) throw std::invalid_argument("classify_edge: no such edge " + to_string(e));
    std::vector<int> common = common_neighborhood(g, e.u, e.v);
    if (common.empty()) return edge_class::facet;
    return is_clique(g, common) ? edge_class::exposed : edge_class::shared;
}

inline bool is_facet_edge(const graph& g, const edge& e) {
    return classify_edge(g, e) == edge_class::facet;
}

inline bool is_exposed(const graph& g, const edge& e) {
    return classify_edge(g, e) == edge_class::exposed;
}

inline std::map<edge, edge_class> classify_edges(const graph& g) {
    std::map<edge, edge_class> out;
    for (const edge& e : g.edges()) out.emplace(e, classify_edge(g, e));
    return out;
}

/// Exposed edges in canonical order.
inline std::vector<edge> exposed_edges(const graph& g) {
    std::vector<edge> out;
    for (const edge& e : g.edges())
        if (classify_edge(g, e) == edge_class::exposed) out.push_back(e);
    return out;
}

inline int incident_exposed_count(const graph& g, int v) {
    int count = 0;
    for (int w : g.neighbors(v))
        if (classify_edge(g, edge(v, w)) == edge_class::exposed) ++count;
    return count;
}

/// Self-test: every bridge must be a facet edge, and on chordal graphs every
/// facet edge must also be a bridge.
inline bool bridge_facet_equivalence_holds(const graph& g) {
    bool chordal_input = is_chordal(g);
    for (const edge& e : g.edges()) {
        bool bridge = is_bridge(g, e);
        bool facet = is_facet_edge(g, e);
        if (bridge && !facet) return false;
        if (chordal_input && facet && !bridge) return false;
    }
    return true;
}

/// Simple cycle given as its vertex sequence; consecutive vertices (cyclically)
/// are edges of the graph the cycle was built against.
struct cycle {
    std::vector<int> vertices;
};

/// Searches for a cycle of exposed edges through e: BFS from e.v to e.u in the
/// spanning subgraph of exposed edges with e removed, neighbors visited in
/// ascending id order. Returns nothing when no such cycle exists.
inline std::optional<cycle> find_exposed_cycle(const graph& g, const edge& e) {
    if (classify_edge(g, e) != edge_class::exposed) throw not_exposed_error(e, classify_edge(g, e));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (const edge& f : g.edges()) {
        if (f == e) continue;
        if (classify_edge(g, f) != edge_class::exposed) continue;
        adj[static_cast<std::size_t>(f.u)].push_back(f.v);
        adj[static_cast<std::size_t>(f.v)].push_back(f.u);
    }
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> frontier;
    parent[static_cast<std::size_t>(e.v)] = e.v;
    frontier.push(e.v);
    while (!frontier.empty() && parent[static_cast<std::size_t>(e.u)] == -1) {
        int v = frontier.front();
        frontier.pop();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(w)] != -1) continue;
            parent[static_cast<std::size_t>(w)] = v;
            frontier.push(w);
        }
    }
    if (parent[static_cast<std::size_t>(e.u)] == -1) return std::nullopt;
    // Path e.v -> e.u, interior listed from the e.v side.
    std::vector<int> path;
    for (int v = e.u; v != e.v; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    path.push_back(e.v);
    std::reverse(path.begin(), path.end());
    cycle c;
    c.vertices.push_back(e.u);
    c.vertices.push_back(e.v);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) c.vertices.push_back(path[i]);
    return c;
}

/// Cycle of exposed edges through e in a chordal graph. On chordal inputs the
/// search cannot fail; no_cycle_error escaping here means a bug.
inline cycle exposed_cycle(const graph& g, const edge& e) {
    if (!is_chordal(g)) throw not_chordal_error();
    auto found = find_exposed_cycle(g, e);
    if (!found) throw no_cycle_error();
    return *found;
}

} // namespace chordal
