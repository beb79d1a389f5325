// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance here is exact; weight comparisons are rational
// equality and counting checks admit zero deviations.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chordal/chordality.hpp"
#include "chordal/erasure.hpp"
#include "chordal/exposure.hpp"
#include "chordal/graph.hpp"
#include "chordal/io.hpp"
#include "chordal/metric.hpp"
#include "chordal/oracles.hpp"
#include "chordal/rng.hpp"
#include "chordal/weighted.hpp"
#include "support.hpp"

using namespace chordal;
using support::graph_from_mask;

namespace {

struct check_failure {
    std::string detail;
};

void demand(bool ok, const std::string& detail) {
    if (!ok) throw check_failure{detail};
}

std::string describe(const edge& e) { return to_string(e); }

// --------------------------------------------------------------------------
// 1. Exposure classifier vs. the maximal-clique oracle.

void criterion_exposure_oracle() {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
        graph g = graph_from_mask(6, mask);
        for (const edge& e : g.edges())
            demand(is_exposed(g, e) == oracle::naive_exposed(g, e),
                   "disagreement on mask " + std::to_string(mask) + " edge " + describe(e));
    }
    for (int i = 0; i < 500; ++i) {
        splitmix64 rng(1000 + static_cast<std::uint64_t>(i));
        int n = 2 + i % 11; // 2..12
        double p = 0.2 + 0.3 * static_cast<double>(i % 3);
        graph g = support::random_graph(n, p, rng);
        for (const edge& e : g.edges())
            demand(is_exposed(g, e) == oracle::naive_exposed(g, e),
                   "disagreement on random graph " + std::to_string(i) + " edge " + describe(e));
    }
}

// --------------------------------------------------------------------------
// 2. Erasure sequences exist exactly for connected chordal graphs.

void criterion_erasure_characterization() {
    for (int i = 0; i < 200; ++i) {
        splitmix64 rng(2000 + static_cast<std::uint64_t>(i));
        int n = 2 + i % 9; // 2..10
        graph h = random_connected_chordal_graph(n, rng.unit(), rng.next());
        erasure_trace t = erasure_sequence_from_complete(h);
        trace_verdict verdict = verify_trace(t);
        demand(verdict.ok, "trace " + std::to_string(i) + " rejected: " + verdict.reason);
        demand(t.length() == graph::complete(n).edge_count() - h.edge_count(),
               "trace " + std::to_string(i) + " has wrong length");
        graph replayed = t.initial;
        for (const edge& e : t.erased) replayed = erase(replayed, e);
        demand(replayed == h, "trace " + std::to_string(i) + " does not replay to its target");

        for (const edge& e : exposed_edges(h)) {
            graph after = erase(h, e);
            demand(is_connected(after) && is_chordal(after),
                   "erasure of " + describe(e) + " broke closure on graph " + std::to_string(i));
        }
    }
    for (int i = 0; i < 200; ++i) {
        splitmix64 rng(3000 + static_cast<std::uint64_t>(i));
        int n = 5 + i % 6; // 5..10
        graph g = support::random_connected_nonchordal(n, rng);
        bool rejected = false;
        try {
            erasure_sequence_from_complete(g);
        } catch (const not_chordal_error&) {
            rejected = true;
        }
        demand(rejected, "non-chordal input " + std::to_string(i) + " was not rejected");
    }
}

// --------------------------------------------------------------------------
// 3. Every exposed edge lies on a cycle of exposed edges (chordal inputs).

std::vector<graph> chordal_corpus() {
    std::vector<graph> out;
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            graph g = graph_from_mask(n, mask);
            bool chordal_oracle = oracle::brute_force_chordal(g);
            if (is_chordal(g) != chordal_oracle)
                throw check_failure{"recognizer disagrees with oracle on mask " + std::to_string(mask)};
            if (chordal_oracle && is_connected(g)) out.push_back(g);
        }
    }
    for (int i = 0; i < 300; ++i) {
        splitmix64 rng(4000 + static_cast<std::uint64_t>(i));
        int n = 2 + i % 11; // 2..12
        out.push_back(random_connected_chordal_graph(n, rng.unit(), rng.next()));
    }
    return out;
}

void criterion_exposed_cycles(const std::vector<graph>& corpus) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const graph& g = corpus[i];
        for (const edge& e : exposed_edges(g)) {
            auto c = find_exposed_cycle(g, e);
            demand(c.has_value(),
                   "no exposed cycle through " + describe(e) + " in corpus graph " + std::to_string(i));
            bool through = false;
            for (std::size_t k = 0; k < c->vertices.size(); ++k) {
                edge step(c->vertices[k], c->vertices[(k + 1) % c->vertices.size()]);
                demand(is_exposed(g, step), "cycle edge " + describe(step) + " is not exposed");
                if (step == e) through = true;
            }
            demand(through, "returned cycle misses " + describe(e));
        }
    }
}

// --------------------------------------------------------------------------
// 4. Vertices inside cliques of size >= 3 meet at least two exposed edges.

void criterion_two_exposed_edges(const std::vector<graph>& corpus) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const graph& g = corpus[i];
        for (const auto& clique : oracle::enumerate_maximal_cliques(g)) {
            if (clique.size() < 3) continue;
            for (int v : clique)
                demand(incident_exposed_count(g, v) >= 2,
                       "vertex " + std::to_string(v) + " of corpus graph " + std::to_string(i) +
                           " has fewer than two exposed edges");
        }
    }
}

// --------------------------------------------------------------------------
// 5. Both algorithms and the brute-force enumeration agree on tree weight.

void criterion_mst_optimality() {
    // Sizes weighted toward small n; 9 appears once per 20 trials.
    static const int sizes[20] = {2, 3, 4, 5, 6, 7, 8, 9, 2, 3, 4, 5, 6, 7, 8, 2, 3, 4, 5, 6};
    for (int i = 0; i < 500; ++i) {
        int n = sizes[i % 20];
        metric_style style = i % 2 ? metric_style::integer_ties : metric_style::generic;
        metric_space m = random_metric(n, 5000 + static_cast<std::uint64_t>(i), style);
        rational expect = oracle::minimum_spanning_weight(m, 9);
        rational greedy = d_erasure_mst(m).tree.weight;
        rational reverse = reverse_delete_mst(m).tree.weight;
        demand(greedy == expect, "d-erasure weight " + greedy.str() + " != oracle " + expect.str() +
                                     " on metric " + std::to_string(i));
        demand(reverse == expect, "reverse-delete weight " + reverse.str() + " != oracle " +
                                      expect.str() + " on metric " + std::to_string(i));
    }
}

// --------------------------------------------------------------------------
// 6. Every minimum spanning tree is reachable by d-erasures.

void criterion_all_msts_reachable() {
    for (int i = 0; i < 100; ++i) {
        int n = 2 + i % 6; // 2..7
        metric_space m = random_metric(n, 6000 + static_cast<std::uint64_t>(i), metric_style::integer_ties);
        auto msts = oracle::enumerate_all_msts(m);
        demand(!msts.empty(), "oracle found no spanning tree on metric " + std::to_string(i));
        for (const spanning_tree& target : msts) {
            erasure_trace t;
            try {
                t = d_erasure_toward(m, target);
            } catch (const internal_contradiction_error& ex) {
                demand(false, std::string("internal contradiction: ") + ex.what());
            }
            trace_verdict verdict = verify_trace(t);
            demand(verdict.ok, "toward-trace rejected on metric " + std::to_string(i) + ": " + verdict.reason);
            demand(t.final_graph() == graph::from_edges(n, target.edges),
                   "toward-trace missed its target on metric " + std::to_string(i));
        }
    }
}

// --------------------------------------------------------------------------
// 7. The unit-square regression with both diameters of length 2.

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw check_failure{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_square_regression() {
    metric_space m = support::square_metric();
    graph k4 = graph::complete(4);
    demand(exposed_edges(k4).size() == 6, "not every edge of the initial graph is exposed");

    graph after = erase(k4, edge(0, 2));
    demand(classify_edge(after, edge(1, 3)) == edge_class::shared,
           "surviving diameter is not classified shared");

    d_erasure_result greedy = d_erasure_mst(m);
    demand(greedy.tree.weight == rational(3), "d-erasure weight is " + greedy.tree.weight.str());
    demand(greedy.trace.erased == std::vector<edge>{edge(0, 2), edge(0, 1), edge(1, 3)},
           "d-erasure trace deviates from the frozen sequence");

    reverse_delete_result reverse = reverse_delete_mst(m);
    demand(reverse.tree.weight == rational(3), "reverse-delete weight is " + reverse.tree.weight.str());
    demand(reverse.removed.size() == 3 && m.weight(reverse.removed[0]) == rational(2) &&
               m.weight(reverse.removed[1]) == rational(2),
           "reverse-delete does not remove both diameters first");
    graph mid = k4.without_edge(reverse.removed[0]).without_edge(reverse.removed[1]);
    demand(mid == support::cycle_graph(4), "reverse-delete does not pass through the plain cycle");

    // Byte-exact golden documents, annotations included.
    io::trace_document d_doc;
    d_doc.trace = greedy.trace;
    d_doc.algorithm = "d-erasure";
    for (std::size_t j = 0; j < greedy.trace.length(); ++j)
        d_doc.annotations.push_back({m.weight(greedy.trace.erased[j]), greedy.exposed_counts[j]});
    std::string golden_dir = CHORDAL_GOLDEN_DIR;
    demand(io::render(io::to_json(d_doc)) == read_file(golden_dir + "/square_d_erasure_trace.json"),
           "d-erasure trace bytes deviate from the golden file");

    io::trace_document r_doc;
    r_doc.trace = erasure_trace{reverse.initial, reverse.removed};
    r_doc.algorithm = "reverse-delete";
    for (std::size_t j = 0; j < reverse.removed.size(); ++j)
        r_doc.annotations.push_back({m.weight(reverse.removed[j]), reverse.exposed_counts[j]});
    demand(io::render(io::to_json(r_doc)) == read_file(golden_dir + "/square_reverse_delete_trace.json"),
           "reverse-delete trace bytes deviate from the golden file");
}

// --------------------------------------------------------------------------
// 8. Stage counts: binom(n-1, 2) removals for n = 2..10.

void criterion_stage_counts() {
    for (int n = 2; n <= 10; ++n) {
        metric_space m = random_metric(n, 7000 + static_cast<std::uint64_t>(n));
        std::size_t expect = static_cast<std::size_t>((n - 1) * (n - 2) / 2);
        std::size_t removed = reverse_delete_mst(m).removed.size();
        demand(removed == expect, "reverse-delete removed " + std::to_string(removed) + " edges at n=" +
                                      std::to_string(n));
        std::size_t erased = erase_to_tree(graph::complete(n)).length();
        demand(erased == expect,
               "erase-to-tree length " + std::to_string(erased) + " at n=" + std::to_string(n));
    }
}

// --------------------------------------------------------------------------
// 9. The constructed weight system replays its trace greedily.

void criterion_metric_construction() {
    for (int i = 0; i < 100; ++i) {
        splitmix64 rng(8000 + static_cast<std::uint64_t>(i));
        int n = 2 + i % 9; // 2..10
        graph h = random_connected_chordal_graph(n, rng.unit(), rng.next());
        erasure_trace t = erasure_sequence_from_complete(h);
        long steps = static_cast<long>(t.length());
        rational eps = steps >= 2 ? rational(1, steps) : rational(1);
        metric_space m = metric_from_erasure_trace(t, eps);
        demand(!validate_metric(m).has_value(), "constructed weights violate the triangle inequality");
        d_erasure_result replay = d_erasure_mst(m);
        demand(replay.trace.length() >= t.length(), "greedy replay is shorter than the trace");
        for (std::size_t j = 0; j < t.length(); ++j) {
            demand(replay.trace.erased[j] == t.erased[j],
                   "greedy replay step " + std::to_string(j) + " deviates on trace " + std::to_string(i));
            rational expect = rational(2) - rational(static_cast<long>(j)) * eps;
            demand(m.weight(replay.trace.erased[j]) == expect,
                   "erased weight at step " + std::to_string(j) + " is not 2 - j*eps");
        }
        for (std::size_t j = t.length(); j < replay.trace.length(); ++j)
            demand(m.weight(replay.trace.erased[j]) == rational(1),
                   "surviving-edge erasure with weight != 1 at step " + std::to_string(j));
    }
}

// --------------------------------------------------------------------------
// 10. Desk-scale performance with incremental maintenance.

void criterion_performance(std::string& note) {
    metric_space m = random_metric(100, 424242);
    auto start = std::chrono::steady_clock::now();
    d_erasure_result fast = d_erasure_mst(m, exposed_maintenance::incremental);
    double fast_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    demand(fast.trace.length() == 4851, "unexpected trace length at n=100");
    demand(fast_seconds < 10.0,
           "incremental run took " + std::to_string(fast_seconds) + "s, limit is 10s");

    d_erasure_result slow = d_erasure_mst(m, exposed_maintenance::full_rescan);
    demand(fast.tree.weight == slow.tree.weight,
           "incremental and full-recomputation weights differ");
    std::ostringstream buf;
    buf.setf(std::ios::fixed);
    buf.precision(2);
    buf << "incremental " << fast_seconds << "s, weight " << fast.tree.weight.str();
    note = buf.str();
}

} // namespace

int main() {
    struct criterion {
        int id;
        const char* title;
        std::function<void(std::string&)> run;
    };

    std::vector<graph> corpus; // shared by criteria 3 and 4
    std::vector<criterion> criteria = {
        {1, "exposure classifier matches the maximal-clique oracle (32768 exhaustive + 500 random graphs)",
         [](std::string&) { criterion_exposure_oracle(); }},
        {2, "erasure sequences from the complete graph: 200 chordal targets replay, 200 non-chordal rejected",
         [](std::string&) { criterion_erasure_characterization(); }},
        {3, "every exposed edge lies on a cycle of exposed edges (exhaustive n<=6 + 300 random chordal)",
         [&corpus](std::string&) {
             corpus = chordal_corpus();
             criterion_exposed_cycles(corpus);
         }},
        {4, "every vertex inside a clique of size >= 3 meets at least two exposed edges",
         [&corpus](std::string&) { criterion_two_exposed_edges(corpus); }},
        {5, "d-erasure, reverse-delete, and exhaustive enumeration agree on MST weight (500 metrics)",
         [](std::string&) { criterion_mst_optimality(); }},
        {6, "every minimum spanning tree is reached exactly by directed d-erasures (100 metrics)",
         [](std::string&) { criterion_all_msts_reachable(); }},
        {7, "unit-square regression: exposure flips, weight 3, byte-exact golden traces",
         [](std::string&) { criterion_square_regression(); }},
        {8, "reverse-delete and erase-to-tree both take binom(n-1,2) steps for n=2..10",
         [](std::string&) { criterion_stage_counts(); }},
        {9, "constructed weight systems replay their erasure traces greedily (100 traces)",
         [](std::string&) { criterion_metric_construction(); }},
        {10, "n=100 greedy run under 10 seconds, equal to full recomputation",
         [](std::string& note) { criterion_performance(note); }},
    };

    int failures = 0;
    for (const criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = true;
        std::string detail;
        try {
            c.run(note);
        } catch (const check_failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& ex) {
            ok = false;
            detail = std::string("unexpected exception: ") + ex.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %2d  %s", ok ? "PASS" : "FAIL", c.id, c.title);
        if (!note.empty()) std::printf(" (%s)", note.c_str());
        std::printf("  [%.1fs]\n", seconds);
        if (!ok) {
            std::printf("      %s\n", detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
