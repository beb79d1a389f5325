#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "erasure.hpp"
#include "errors.hpp"
#include "exposure.hpp"
#include "graph.hpp"
#include "metric.hpp"
#include "rational.hpp"

// Structured text formats for graphs, weight systems, and erasure traces,
// plus DOT export. Writers emit a single canonical rendering so identical
// inputs produce byte-identical files.
namespace chordal::io {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* graph_format = "graph/1";
inline constexpr const char* metric_format = "metric/1";
inline constexpr const char* trace_format = "trace/1";

struct graph_document {
    graph g;
    std::vector<std::string> labels; ///< empty when unlabeled
};

struct metric_document {
    metric_space metric;
    std::vector<std::string> labels;
};

struct trace_annotation {
    rational weight;      ///< weight of the removed edge
    std::size_t exposed;  ///< exposed edges before the removal
};

struct trace_document {
    erasure_trace trace;
    std::string algorithm;                    ///< optional provenance tag
    std::vector<trace_annotation> annotations; ///< empty or one per step
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw parse_error(what);
}

inline const ordered_json& field(const ordered_json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int int_field(const ordered_json& j, const char* key) {
    const ordered_json& f = field(j, key);
    require(f.is_number_integer(), std::string("field '") + key + "' must be an integer");
    return f.get<int>();
}

inline void check_format(const ordered_json& j, const char* expected) {
    const ordered_json& f = field(j, "format");
    require(f.is_string() && f.get<std::string>() == expected,
            std::string("expected format \"") + expected + "\"");
}

inline std::vector<std::string> labels_field(const ordered_json& j, int n) {
    std::vector<std::string> labels;
    if (!j.contains("labels")) return labels;
    const ordered_json& f = j.at("labels");
    require(f.is_array() && f.size() == static_cast<std::size_t>(n),
            "labels must be an array with one entry per vertex");
    for (const auto& item : f) {
        require(item.is_string(), "labels must be strings");
        labels.push_back(item.get<std::string>());
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t k = i + 1; k < labels.size(); ++k)
            require(labels[i] != labels[k], "labels must be unique");
    return labels;
}

inline edge edge_entry(const ordered_json& item, int n) {
    require(item.is_array() && item.size() == 2 && item[0].is_number_integer() &&
                item[1].is_number_integer(),
            "edge entries must be [u, v] integer pairs");
    int u = item[0].get<int>();
    int v = item[1].get<int>();
    require(u >= 0 && v >= 0 && u < n && v < n, "edge endpoint out of range");
    require(u != v, "loops are not allowed");
    return edge(u, v);
}

inline ordered_json edge_entry_json(const edge& e) { return ordered_json::array({e.u, e.v}); }

} // namespace detail

// ---------------------------------------------------------------------------
// graph documents

inline ordered_json to_json(const graph_document& doc) {
    ordered_json j;
    j["format"] = graph_format;
    j["n"] = doc.g.vertex_count();
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    ordered_json edges = ordered_json::array();
    for (const edge& e : doc.g.edges()) edges.push_back(detail::edge_entry_json(e));
    j["edges"] = edges;
    return j;
}

inline graph_document graph_from_json(const ordered_json& j) {
    detail::check_format(j, graph_format);
    int n = detail::int_field(j, "n");
    detail::require(n >= 1, "vertex count must be positive");
    graph_document doc;
    doc.labels = detail::labels_field(j, n);
    const ordered_json& edges = detail::field(j, "edges");
    detail::require(edges.is_array(), "edges must be an array");
    std::vector<edge> es;
    for (const auto& item : edges) {
        edge e = detail::edge_entry(item, n);
        for (const edge& seen : es) detail::require(!(seen == e), "duplicate edge " + to_string(e));
        es.push_back(e);
    }
    doc.g = graph::from_edges(n, es);
    return doc;
}

// ---------------------------------------------------------------------------
// metric documents

inline ordered_json to_json(const metric_document& doc) {
    ordered_json j;
    j["format"] = metric_format;
    j["n"] = doc.metric.point_count();
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    ordered_json weights = ordered_json::array();
    for (const edge& e : doc.metric.pairs())
        weights.push_back(ordered_json::array({e.u, e.v, doc.metric.weight(e).str()}));
    j["weights"] = weights;
    return j;
}

inline metric_document metric_from_json(const ordered_json& j) {
    detail::check_format(j, metric_format);
    int n = detail::int_field(j, "n");
    detail::require(n >= 1, "point count must be positive");
    metric_document doc;
    doc.labels = detail::labels_field(j, n);
    const ordered_json& weights = detail::field(j, "weights");
    detail::require(weights.is_array(), "weights must be an array");
    std::vector<std::pair<edge, rational>> pairs;
    for (const auto& item : weights) {
        detail::require(item.is_array() && item.size() == 3, "weight entries must be [u, v, w]");
        edge e = detail::edge_entry(ordered_json::array({item[0], item[1]}), n);
        detail::require(item[2].is_string(), "weights must be decimal or p/q strings");
        auto w = rational::parse(item[2].get<std::string>());
        detail::require(w.has_value(), "cannot parse weight '" + item[2].get<std::string>() + "'");
        detail::require(w->sign() > 0, "weights must be positive");
        pairs.emplace_back(e, *w);
    }
    try {
        doc.metric = metric_space::from_pairs(n, pairs);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
    return doc;
}

// ---------------------------------------------------------------------------
// trace documents

inline ordered_json to_json(const trace_document& doc) {
    ordered_json j;
    j["format"] = trace_format;
    if (!doc.algorithm.empty()) j["algorithm"] = doc.algorithm;
    j["initial"] = to_json(graph_document{doc.trace.initial, {}});
    ordered_json erased = ordered_json::array();
    for (const edge& e : doc.trace.erased) erased.push_back(detail::edge_entry_json(e));
    j["erased"] = erased;
    if (!doc.annotations.empty()) {
        ordered_json notes = ordered_json::array();
        for (const trace_annotation& a : doc.annotations) {
            ordered_json note;
            note["weight"] = a.weight.str();
            note["exposed"] = a.exposed;
            notes.push_back(note);
        }
        j["annotations"] = notes;
    }
    return j;
}

/// `load_reference` resolves a string-valued "initial" (a path to a graph
/// document); pass nullptr to reject references.
inline trace_document trace_from_json(const ordered_json& j,
                                      const std::function<ordered_json(const std::string&)>& load_reference = nullptr) {
    detail::check_format(j, trace_format);
    trace_document doc;
    if (j.contains("algorithm")) {
        detail::require(j.at("algorithm").is_string(), "algorithm must be a string");
        doc.algorithm = j.at("algorithm").get<std::string>();
    }
    const ordered_json& initial = detail::field(j, "initial");
    if (initial.is_string()) {
        detail::require(load_reference != nullptr, "initial graph references are not supported here");
        doc.trace.initial = graph_from_json(load_reference(initial.get<std::string>())).g;
    } else {
        doc.trace.initial = graph_from_json(initial).g;
    }
    int n = doc.trace.initial.vertex_count();
    const ordered_json& erased = detail::field(j, "erased");
    detail::require(erased.is_array(), "erased must be an array");
    for (const auto& item : erased) doc.trace.erased.push_back(detail::edge_entry(item, n));
    if (j.contains("annotations")) {
        const ordered_json& notes = j.at("annotations");
        detail::require(notes.is_array() && notes.size() == doc.trace.erased.size(),
                        "annotations must match the erased list");
        for (const auto& note : notes) {
            detail::require(note.is_object() && note.contains("weight") && note.at("weight").is_string(),
                            "annotation weight must be a string");
            auto w = rational::parse(note.at("weight").get<std::string>());
            detail::require(w.has_value(), "cannot parse annotation weight");
            detail::require(note.contains("exposed") && note.at("exposed").is_number_unsigned(),
                            "annotation exposed count must be a nonnegative integer");
            doc.annotations.push_back({*w, note.at("exposed").get<std::size_t>()});
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// rendering and files

/// Canonical rendering: two-space indent and a trailing newline.
inline std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

/// Reads a JSON document; "-" means standard input.
inline ordered_json parse_file(const std::string& path) {
    ordered_json j;
    if (path == "-") {
        j = ordered_json::parse(std::cin, nullptr, false);
    } else {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open " + path);
        j = ordered_json::parse(in, nullptr, false);
    }
    if (j.is_discarded()) throw parse_error("invalid JSON in " + (path == "-" ? "stdin" : path));
    return j;
}

inline std::string format_of(const ordered_json& j) {
    if (!j.is_object() || !j.contains("format") || !j.at("format").is_string())
        throw parse_error("document has no format field");
    return j.at("format").get<std::string>();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path);
    out << content;
}

// ---------------------------------------------------------------------------
// DOT export

/// Renders the graph with per-class edge styling: exposed solid, shared
/// dashed, facet bold. Weights become edge labels when a metric is supplied.
inline std::string to_dot(const graph& g, const std::vector<std::string>& labels = {},
                          const metric_space* weights = nullptr) {
    auto name = [&](int v) {
        if (static_cast<std::size_t>(v) < labels.size()) return "\"" + labels[static_cast<std::size_t>(v)] + "\"";
        return std::to_string(v);
    };
    std::ostringstream out;
    out << "graph {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << name(v) << ";\n";
    for (const edge& e : g.edges()) {
        out << "  " << name(e.u) << " -- " << name(e.v) << " [";
        switch (classify_edge(g, e)) {
            case edge_class::exposed: out << "style=solid"; break;
            case edge_class::shared: out << "style=dashed"; break;
            case edge_class::facet: out << "style=bold"; break;
        }
        if (weights) out << ", label=\"" << weights->weight(e).str() << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace chordal::io
