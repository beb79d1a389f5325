#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordal {

/// Canonical undirected edge: endpoints are stored with u < v.
struct edge {
    int u;
    int v;

    edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b)
            throw std::invalid_argument("edge: loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0)
            throw std::invalid_argument("edge: negative vertex id");
    }

    auto operator<=>(const edge&) const = default;
};

inline std::string to_string(const edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Immutable undirected simple graph over dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted; no loops, no multi-edges.
class graph {
public:
    graph() = default;

    static graph empty(int n) {
        if (n < 1) throw std::invalid_argument("graph: vertex count must be positive");
        graph g;
        g.n_ = n;
        g.adj_.resize(static_cast<std::size_t>(n));
        return g;
    }

    static graph complete(int n) {
        graph g = empty(n);
        for (int v = 0; v < n; ++v) {
            g.adj_[static_cast<std::size_t>(v)].reserve(static_cast<std::size_t>(n - 1));
            for (int w = 0; w < n; ++w)
                if (w != v) g.adj_[static_cast<std::size_t>(v)].push_back(w);
        }
        g.m_ = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
        return g;
    }

    static graph from_edges(int n, std::span<const edge> es) {
        graph g = empty(n);
        for (const edge& e : es) g.insert(e);
        return g;
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool has_edge(const edge& e) const { return has_edge(e.u, e.v); }

    /// Sorted open neighborhood of v.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges in canonical (u,v)-lexicographic order.
    std::vector<edge> edges() const {
        std::vector<edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int w : adj_[static_cast<std::size_t>(u)])
                if (w > u) out.emplace_back(u, w);
        return out;
    }

    graph with_edge(const edge& e) const {
        graph g = *this;
        g.check_vertex(e.v);
        g.insert(e);
        return g;
    }

    graph without_edge(const edge& e) const {
        if (!has_edge(e)) throw std::invalid_argument("graph: no such edge " + to_string(e));
        graph g = *this;
        auto& au = g.adj_[static_cast<std::size_t>(e.u)];
        auto& av = g.adj_[static_cast<std::size_t>(e.v)];
        au.erase(std::lower_bound(au.begin(), au.end(), e.v));
        av.erase(std::lower_bound(av.begin(), av.end(), e.u));
        --g.m_;
        return g;
    }

    bool is_complete() const {
        return m_ == static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) - 1) / 2;
    }

    bool operator==(const graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;

    void check_vertex(int v) const {
        if (!has_vertex(v))
            throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range");
    }

    void insert(const edge& e) {
        check_vertex(e.v);
        auto& au = adj_[static_cast<std::size_t>(e.u)];
        auto it = std::lower_bound(au.begin(), au.end(), e.v);
        if (it != au.end() && *it == e.v) return; // set semantics
        au.insert(it, e.v);
        auto& av = adj_[static_cast<std::size_t>(e.v)];
        av.insert(std::lower_bound(av.begin(), av.end(), e.u), e.u);
        ++m_;
    }
};

/// Sorted copy of the open neighborhood {w | vw in E}.
inline std::vector<int> open_neighborhood(const graph& g, int v) {
    return g.neighbors(v);
}

/// open_neighborhood(g, v) plus v itself, sorted.
inline std::vector<int> closed_neighborhood(const graph& g, int v) {
    std::vector<int> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

/// N(u) intersected with N(v); u and v need not be adjacent.
inline std::vector<int> common_neighborhood(const graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighborhood: identical endpoints");
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// True iff every pair in `verts` is adjacent. Vacuously true for |S| <= 1.
inline bool is_clique(const graph& g, std::span<const int> verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] == verts[j]) continue;
            if (!g.has_edge(verts[i], verts[j])) return false;
        }
    return true;
}

inline bool is_clique(const graph& g, const std::vector<int>& verts) {
    return is_clique(g, std::span<const int>(verts));
}

struct induced_subgraph_result {
    graph g;
    std::vector<int> original; ///< new id -> old id (ascending)
    std::vector<int> relabel;  ///< old id -> new id, -1 when absent
};

/// Induced subgraph on the vertex set A, relabeled to 0..|A|-1 in ascending
/// order of the original ids.
inline induced_subgraph_result induced_subgraph(const graph& g, std::span<const int> a) {
    std::vector<int> verts(a.begin(), a.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    induced_subgraph_result r;
    r.relabel.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!g.has_vertex(verts[i]))
            throw std::out_of_range("induced_subgraph: vertex out of range");
        r.relabel[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    }
    r.original = verts;
    graph sub = graph::empty(static_cast<int>(verts.size()));
    std::vector<edge> es;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int w : g.neighbors(verts[i])) {
            int j = r.relabel[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
        }
    r.g = graph::from_edges(static_cast<int>(verts.size()), es);
    return r;
}

inline induced_subgraph_result induced_subgraph(const graph& g, const std::vector<int>& a) {
    return induced_subgraph(g, std::span<const int>(a));
}

/// Connected components as sorted vertex lists, ordered by minimum member.
inline std::vector<std::vector<int>> connected_components(const graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

inline bool is_connected(const graph& g) {
    return connected_components(g).size() == 1;
}

/// True iff removing e increases the number of connected components.
inline bool is_bridge(const graph& g, const edge& e) {
    if (!g.has_edge(e)) throw std::invalid_argument("is_bridge: no such edge " + to_string(e));
    // e is a bridge iff e.v is unreachable from e.u without crossing e.
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{e.u};
    seen[static_cast<std::size_t>(e.u)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return !seen[static_cast<std::size_t>(e.v)];
}

} // namespace chordal
