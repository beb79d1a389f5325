#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace chordal {

/// Finite point set with an exact positive symmetric weight on every pair.
/// The triangle inequality is not a construction invariant; validate_metric
/// checks it for callers that require a true metric.
class metric_space {
public:
    metric_space() = default;

    /// All pairs initialized to `value`.
    static metric_space uniform(int n, const rational& value) {
        metric_space m = unset(n);
        for (auto& w : m.w_) w = value;
        m.check_positive();
        return m;
    }

    /// Weights supplied pair by pair; every pair must be covered exactly once.
    static metric_space from_pairs(int n, const std::vector<std::pair<edge, rational>>& weights) {
        metric_space m = unset(n);
        std::vector<char> set(m.w_.size(), 0);
        for (const auto& [e, w] : weights) {
            std::size_t idx = m.index(e.u, e.v);
            if (set[idx]) throw std::invalid_argument("metric_space: duplicate pair " + to_string(e));
            set[idx] = 1;
            m.w_[idx] = w;
        }
        for (char s : set)
            if (!s) throw std::invalid_argument("metric_space: missing pair weight");
        m.check_positive();
        return m;
    }

    int point_count() const { return n_; }

    const rational& weight(int u, int v) const {
        if (u == v) throw std::invalid_argument("metric_space: weight of identical points");
        return w_[index(u, v)];
    }

    const rational& weight(const edge& e) const { return weight(e.u, e.v); }

    /// All pairs as canonical edges, lexicographic.
    std::vector<edge> pairs() const {
        std::vector<edge> out;
        out.reserve(w_.size());
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) out.emplace_back(u, v);
        return out;
    }

private:
    int n_ = 0;
    std::vector<rational> w_;

    static metric_space unset(int n) {
        if (n < 1) throw std::invalid_argument("metric_space: point count must be positive");
        metric_space m;
        m.n_ = n;
        m.w_.assign(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2, rational());
        return m;
    }

    void check_positive() const {
        for (const rational& w : w_)
            if (w.sign() <= 0) throw std::invalid_argument("metric_space: weights must be positive");
    }

    std::size_t index(int u, int v) const {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_ || u == v) throw std::out_of_range("metric_space: pair out of range");
        std::size_t uu = static_cast<std::size_t>(u);
        std::size_t nn = static_cast<std::size_t>(n_);
        return uu * nn - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
    }
};

struct triangle_violation {
    int x, y, z; ///< d(x,y) > d(x,z) + d(z,y)
};

/// Exact triangle-inequality scan over all triples; positivity and symmetry
/// hold structurally. Returns the first violation in (x,y,z) scan order.
inline std::optional<triangle_violation> validate_metric(const metric_space& m) {
    int n = m.point_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (m.weight(x, y) > m.weight(x, z) + m.weight(z, y))
                    return triangle_violation{x, y, z};
            }
    return std::nullopt;
}

/// Spanning tree of a metric space: n-1 edges, connected and acyclic, with
/// the exact total weight. Construction verifies the tree structure.
struct spanning_tree {
    std::vector<edge> edges; ///< canonical order
    rational weight;

    static spanning_tree of(const metric_space& m, std::vector<edge> es) {
        int n = m.point_count();
        if (es.size() != static_cast<std::size_t>(n) - 1)
            throw std::invalid_argument("spanning_tree: expected n-1 edges");
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end())
            throw std::invalid_argument("spanning_tree: duplicate edge");
        graph g = graph::from_edges(n, es);
        if (!is_connected(g)) throw std::invalid_argument("spanning_tree: edges do not span");
        spanning_tree t;
        t.edges = std::move(es);
        for (const edge& e : t.edges) t.weight += m.weight(e);
        return t;
    }

    bool operator==(const spanning_tree& other) const { return edges == other.edges; }
};

enum class metric_style {
    generic,      ///< rationals in [1,2] with denominator 64; a true metric
    integer_ties  ///< integers in {1..4}; tie-heavy, may violate triangles
};

/// Seeded random weight system on n points.
inline metric_space random_metric(int n, std::uint64_t seed, metric_style style = metric_style::generic) {
    splitmix64 rng(seed);
    std::vector<std::pair<edge, rational>> weights;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            rational w = style == metric_style::generic
                             ? rational(64 + static_cast<long>(rng.below(65)), 64)
                             : rational(1 + static_cast<long>(rng.below(4)));
            weights.emplace_back(edge(u, v), w);
        }
    return metric_space::from_pairs(n, weights);
}

} // namespace chordal
