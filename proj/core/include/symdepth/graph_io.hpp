#pragma once

#include <string>

#include "symdepth/graph.hpp"

namespace symdepth {

/// Parse a graph from either accepted format:
///   JSON:  {"n": 5, "edges": [[0,1],[1,2]]}
///   text:  first line "n m", then m lines "u v"
/// Self-loops, duplicate edges (in either orientation), and out-of-range
/// vertices are rejected with a diagnostic naming the offending field.
Graph parse_graph(const std::string& text);

/// Canonical JSON form: 0-based vertices, each pair sorted, pairs sorted
/// lexicographically. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

}  // namespace symdepth
