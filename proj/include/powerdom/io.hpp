#pragma once

// Edge-list text format. Canonical form:
//   line 1: "n m"
//   then m lines "u v" with u < v, ascending lexicographic order.
// '#' begins a comment line. Writers emit canonical order; readers accept
// edges in any order but reject duplicates, self-loops and out-of-range ids.

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "powerdom/graph.hpp"

namespace powerdom {

namespace detail {
inline bool data_line(const std::string& line, std::string& out) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') return false;
    out = line;
    return true;
}
}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    std::string line, data;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        if (!detail::data_line(line, data)) continue;
        std::istringstream head(data);
        if (!(head >> n >> m) || n < 0 || m < 0)
            throw GraphError("edge list: malformed header line: " + data);
        break;
    }
    if (n < 0) throw GraphError("edge list: missing \"n m\" header");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
        if (!detail::data_line(line, data)) continue;
        std::istringstream row(data);
        long long u, v;
        if (!(row >> u >> v))
            throw GraphError("edge list: malformed edge line: " + data);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (static_cast<long long>(edges.size()) < m)
        throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " +
                         std::to_string(edges.size()));
    return Graph::build(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list_string(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_edge_list(in);
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

// Label sidecar: one "name id" line per label, sorted by name.
inline void write_labels(std::ostream& out, const std::map<std::string, Vertex>& labels) {
    for (const auto& [name, id] : labels) out << name << ' ' << id << '\n';
}

inline void write_labels_file(const std::string& path,
                              const std::map<std::string, Vertex>& labels) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open " + path + " for writing");
    write_labels(out, labels);
}

}  // namespace powerdom
