#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_chordal_error : public error {
public:
    not_chordal_error() : error("graph is not chordal") {}
};

class not_connected_error : public error {
public:
    not_connected_error() : error("graph is not connected") {}
};

class already_complete_error : public error {
public:
    already_complete_error() : error("graph is already complete") {}
};

class no_cycle_error : public error {
public:
    no_cycle_error() : error("no cycle of exposed edges found") {}
};

class no_exposed_edge_error : public error {
public:
    no_exposed_edge_error() : error("graph has no exposed edge") {}
};

class size_limit_error : public error {
public:
    explicit size_limit_error(const std::string& what) : error(what) {}
};

class not_minimum_error : public error {
public:
    not_minimum_error() : error("tree is not a minimum spanning tree") {}
};

class internal_contradiction_error : public error {
public:
    explicit internal_contradiction_error(const std::string& what) : error(what) {}
};

class invalid_trace_error : public error {
public:
    explicit invalid_trace_error(const std::string& what) : error(what) {}
};

class epsilon_range_error : public error {
public:
    explicit epsilon_range_error(const std::string& what) : error(what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace chordal
