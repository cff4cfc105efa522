// graph_io.hpp -- graph6 and plain edge-list serialization.
#pragma once

#include <string>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// graph6, short and long size forms (n <= 258047); bit-exact per the format:
// header N(n), then the upper triangle in column-major order packed into
// 6-bit groups offset by 63.
std::string write_graph6(const Graph& g);
Graph read_graph6(const std::string& text);

// edge list: header line "n <count>", then one "u v" line per edge.
// Duplicate edges are kept once and reported through `warnings`.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text, std::vector<std::string>* warnings = nullptr);

// format sniffing: an edge-list document starts with the literal token "n";
// anything else is treated as graph6
Graph read_graph_auto(const std::string& text, std::vector<std::string>* warnings = nullptr);

}  // namespace satlab
