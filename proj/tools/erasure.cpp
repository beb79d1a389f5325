// Command-line front end: chordality checks, edge classification, erasure
// sequences, minimum spanning trees of exact-weight metrics, generators, and
// DOT export. Exit codes: 0 success/true, 1 semantic negative, 2 IO/parse
// error, 3 input-contract violation, 4 oracle mismatch.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chordal/chordality.hpp"
#include "chordal/erasure.hpp"
#include "chordal/exposure.hpp"
#include "chordal/graph.hpp"
#include "chordal/io.hpp"
#include "chordal/metric.hpp"
#include "chordal/oracles.hpp"
#include "chordal/weighted.hpp"

namespace {

using namespace chordal;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_io = 2;
constexpr int exit_contract = 3;
constexpr int exit_oracle = 4;

int oracle_limit(int fallback) {
    if (const char* raw = std::getenv("ERASURE_ORACLE_LIMIT")) {
        try {
            int value = std::stoi(raw);
            if (value > 0) return value;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid ERASURE_ORACLE_LIMIT\n";
    }
    return fallback;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        io::write_file(out_path, text);
    }
}

io::trace_document load_trace(const std::string& path) {
    io::ordered_json j = io::parse_file(path);
    auto base = std::filesystem::path(path).parent_path();
    return io::trace_from_json(j, [&base](const std::string& ref) {
        return io::parse_file((base / ref).string());
    });
}

int cmd_check_chordal(const std::string& path) {
    io::graph_document doc = io::graph_from_json(io::parse_file(path));
    elimination_ordering ord = maximum_cardinality_search(doc.g);
    if (is_perfect_elimination_ordering(doc.g, ord)) {
        std::cout << "chordal\n";
        std::cout << "elimination ordering:";
        for (int v : ord.order) std::cout << " " << v;
        std::cout << "\n";
        return exit_ok;
    }
    std::cout << "not chordal\n";
    int limit = oracle_limit(oracle::default_clique_bound);
    if (doc.g.vertex_count() <= limit && doc.g.vertex_count() <= 63) {
        auto witness = oracle::find_induced_long_cycle(doc.g, limit);
        if (witness) {
            std::cout << "induced cycle:";
            for (int v : *witness) std::cout << " " << v;
            std::cout << "\n";
            return exit_negative;
        }
    }
    std::cout << "failed elimination ordering:";
    for (int v : ord.order) std::cout << " " << v;
    std::cout << "\n";
    return exit_negative;
}

int cmd_exposed(const std::string& path, bool as_json) {
    io::graph_document doc = io::graph_from_json(io::parse_file(path));
    auto classes = classify_edges(doc.g);
    if (as_json) {
        io::ordered_json edges = io::ordered_json::array();
        for (const auto& [e, c] : classes)
            edges.push_back(io::ordered_json::array({e.u, e.v, to_string(c)}));
        io::ordered_json j;
        j["format"] = "exposure/1";
        j["n"] = doc.g.vertex_count();
        j["edges"] = edges;
        std::cout << io::render(j);
    } else {
        for (const auto& [e, c] : classes)
            std::cout << e.u << " " << e.v << " " << to_string(c) << "\n";
    }
    return exit_ok;
}

void write_trace_file(const std::string& path, const erasure_trace& trace, const std::string& algorithm,
                      const metric_space* m, const std::vector<std::size_t>& exposed_counts) {
    io::trace_document doc;
    doc.trace = trace;
    doc.algorithm = algorithm;
    if (m && exposed_counts.size() == trace.erased.size())
        for (std::size_t j = 0; j < trace.erased.size(); ++j)
            doc.annotations.push_back({m->weight(trace.erased[j]), exposed_counts[j]});
    io::write_file(path, io::render(io::to_json(doc)));
}

int cmd_mst(const std::string& path, const std::string& algorithm, const std::string& trace_out,
            bool use_oracle, bool raw_weights, bool as_json) {
    io::metric_document doc = io::metric_from_json(io::parse_file(path));
    if (!raw_weights) {
        if (auto violation = validate_metric(doc.metric)) {
            std::cerr << "triangle inequality violated: d(" << violation->x << "," << violation->y
                      << ") > d(" << violation->x << "," << violation->z << ") + d(" << violation->z
                      << "," << violation->y << ")\n";
            return exit_contract;
        }
    }

    spanning_tree tree;
    if (algorithm == "d-erasure") {
        d_erasure_result r = d_erasure_mst(doc.metric);
        tree = r.tree;
        if (!trace_out.empty())
            write_trace_file(trace_out, r.trace, "d-erasure", &doc.metric, r.exposed_counts);
    } else {
        reverse_delete_result r = reverse_delete_mst(doc.metric);
        tree = r.tree;
        if (!trace_out.empty())
            write_trace_file(trace_out, erasure_trace{r.initial, r.removed}, "reverse-delete",
                             &doc.metric, r.exposed_counts);
    }

    if (as_json) {
        io::ordered_json edges = io::ordered_json::array();
        for (const edge& e : tree.edges) edges.push_back(io::ordered_json::array({e.u, e.v}));
        io::ordered_json j;
        j["format"] = "tree/1";
        j["algorithm"] = algorithm;
        j["edges"] = edges;
        j["weight"] = tree.weight.str();
        std::cout << io::render(j);
    } else {
        for (const edge& e : tree.edges)
            std::cout << e.u << " " << e.v << " " << doc.metric.weight(e).str() << "\n";
        std::cout << "weight: " << tree.weight.str() << "\n";
    }

    if (use_oracle) {
        int limit = oracle_limit(oracle::default_mst_bound);
        if (doc.metric.point_count() > limit) {
            std::cerr << "oracle: skipped, " << doc.metric.point_count() << " points exceeds limit "
                      << limit << "\n";
        } else {
            rational expect = oracle::minimum_spanning_weight(doc.metric, limit);
            if (expect != tree.weight) {
                std::cerr << "oracle mismatch: expected " << expect.str() << ", got "
                          << tree.weight.str() << "\n";
                return exit_oracle;
            }
            std::cerr << "oracle: weight confirmed\n";
        }
    }
    return exit_ok;
}

int cmd_erase_sequence(const std::string& path, bool to_tree, const std::string& trace_out) {
    io::graph_document doc = io::graph_from_json(io::parse_file(path));
    erasure_trace trace;
    try {
        trace = to_tree ? erase_to_tree(doc.g) : erasure_sequence_from_complete(doc.g);
    } catch (const not_chordal_error& ex) {
        std::cout << "error: " << ex.what() << "\n";
        return exit_negative;
    } catch (const not_connected_error& ex) {
        std::cout << "error: " << ex.what() << "\n";
        return exit_negative;
    }
    for (const edge& e : trace.erased) std::cout << "erase " << e.u << " " << e.v << "\n";
    std::cout << "steps: " << trace.length() << "\n";
    if (!trace_out.empty()) write_trace_file(trace_out, trace, "", nullptr, {});
    return exit_ok;
}

int cmd_verify_trace(const std::string& path) {
    io::trace_document doc = load_trace(path);
    trace_verdict verdict = verify_trace(doc.trace);
    if (verdict.ok) {
        std::cout << "ok: " << doc.trace.length() << " erasures verified\n";
        return exit_ok;
    }
    std::cout << "invalid at step " << verdict.failed_step << ": " << verdict.reason << "\n";
    return exit_negative;
}

int cmd_gen_chordal(int n, double density, std::uint64_t seed, const std::string& out_path) {
    graph g = random_connected_chordal_graph(n, density, seed);
    emit(io::render(io::to_json(io::graph_document{g, {}})), out_path);
    return exit_ok;
}

int cmd_gen_metric(int n, std::uint64_t seed, bool ties, const std::string& out_path) {
    metric_space m = random_metric(n, seed, ties ? metric_style::integer_ties : metric_style::generic);
    emit(io::render(io::to_json(io::metric_document{m, {}})), out_path);
    return exit_ok;
}

int cmd_to_dot(const std::string& path, const std::string& out_path) {
    io::ordered_json j = io::parse_file(path);
    std::string format = io::format_of(j);
    if (format == io::graph_format) {
        io::graph_document doc = io::graph_from_json(j);
        emit(io::to_dot(doc.g, doc.labels), out_path);
        return exit_ok;
    }
    if (format == io::metric_format) {
        io::metric_document doc = io::metric_from_json(j);
        emit(io::to_dot(graph::complete(doc.metric.point_count()), doc.labels, &doc.metric), out_path);
        return exit_ok;
    }
    if (format == io::trace_format) {
        // One frame per prefix graph so the progression can be animated.
        if (out_path.empty()) throw parse_error("trace export needs --out PREFIX");
        io::trace_document doc = load_trace(path);
        graph g = doc.trace.initial;
        for (std::size_t frame = 0; frame <= doc.trace.length(); ++frame) {
            if (frame > 0) g = g.without_edge(doc.trace.erased[frame - 1]);
            char suffix[16];
            std::snprintf(suffix, sizeof suffix, "_%03zu.dot", frame);
            io::write_file(out_path + suffix, io::to_dot(g));
        }
        std::cout << "frames: " << doc.trace.length() + 1 << "\n";
        return exit_ok;
    }
    throw parse_error("unsupported document format \"" + format + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exposed-edge erasures on chordal graphs and exact-weight minimum spanning trees"};
    app.require_subcommand(1);

    std::string file, out_path, trace_out, algorithm = "d-erasure";
    bool as_json = false, use_oracle = false, raw_weights = false, to_tree = false, from_complete = false;
    bool ties = false;
    int gen_n = 0;
    double density = 0.5;
    std::uint64_t seed = 0;

    CLI::App* check = app.add_subcommand("check-chordal", "Recognize a chordal graph; prints a certificate");
    check->add_option("file", file, "graph document")->required();

    CLI::App* exposed = app.add_subcommand("exposed", "Classify every edge as facet, exposed, or shared");
    exposed->add_option("file", file, "graph document")->required();
    exposed->add_flag("--json", as_json, "machine-readable output");

    CLI::App* mst = app.add_subcommand("mst", "Minimum spanning tree of an exact-weight metric");
    mst->add_option("file", file, "metric document")->required();
    mst->add_option("--algorithm", algorithm, "d-erasure or reverse-delete")
        ->check(CLI::IsMember({"d-erasure", "reverse-delete"}));
    mst->add_option("--trace", trace_out, "write the removal trace to this file");
    mst->add_flag("--oracle", use_oracle, "cross-check against brute-force enumeration");
    mst->add_flag("--raw-weights", raw_weights, "skip the triangle inequality check");
    mst->add_flag("--json", as_json, "machine-readable output");

    CLI::App* seq = app.add_subcommand("erase-sequence", "Erasure sequences for a chordal graph");
    seq->add_option("file", file, "graph document")->required();
    seq->add_flag("--to-tree", to_tree, "erase down to a spanning tree");
    seq->add_flag("--from-complete", from_complete, "erasure sequence from the complete graph");
    seq->add_option("--trace", trace_out, "write the trace to this file");

    CLI::App* verify = app.add_subcommand("verify-trace", "Check an erasure trace step by step");
    verify->add_option("file", file, "trace document")->required();

    CLI::App* gen = app.add_subcommand("gen", "Seeded generators");
    CLI::App* gen_chordal = gen->add_subcommand("chordal", "random connected chordal graph");
    gen_chordal->add_option("--n", gen_n, "vertex count")->required();
    gen_chordal->add_option("--density", density, "clique growth in [0,1]");
    gen_chordal->add_option("--seed", seed, "random seed");
    gen_chordal->add_option("--out", out_path, "output file (default stdout)");
    CLI::App* gen_metric = gen->add_subcommand("metric", "random weight system");
    gen_metric->add_option("--n", gen_n, "point count")->required();
    gen_metric->add_option("--seed", seed, "random seed");
    gen_metric->add_flag("--ties", ties, "small integer weights with many ties");
    gen_metric->add_option("--out", out_path, "output file (default stdout)");
    gen->require_subcommand(1);

    CLI::App* dot = app.add_subcommand("to-dot", "DOT export with per-class edge styling");
    dot->add_option("file", file, "graph, metric, or trace document")->required();
    dot->add_option("--out", out_path, "output file, or frame prefix for traces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(check)) return cmd_check_chordal(file);
        if (app.got_subcommand(exposed)) return cmd_exposed(file, as_json);
        if (app.got_subcommand(mst))
            return cmd_mst(file, algorithm, trace_out, use_oracle, raw_weights, as_json);
        if (app.got_subcommand(seq)) {
            if (to_tree == from_complete) {
                std::cerr << "erase-sequence needs exactly one of --to-tree / --from-complete\n";
                return exit_io;
            }
            return cmd_erase_sequence(file, to_tree, trace_out);
        }
        if (app.got_subcommand(verify)) return cmd_verify_trace(file);
        if (app.got_subcommand(gen)) {
            if (gen->got_subcommand(gen_chordal)) return cmd_gen_chordal(gen_n, density, seed, out_path);
            return cmd_gen_metric(gen_n, seed, ties, out_path);
        }
        if (app.got_subcommand(dot)) return cmd_to_dot(file, out_path);
    } catch (const parse_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_io;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_contract;
    } catch (const error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_contract;
    }
    return exit_io;
}
