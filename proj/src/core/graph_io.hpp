#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace ug {

// graph6: printable encoding of simple undirected graphs. The header is
// N(n) (one byte for n <= 62, else 126 + 3 bytes, else 126 126 + 6 bytes of
// big-endian 6-bit groups), followed by the upper-triangle bits x(0,1),
// x(0,2), x(1,2), x(0,3), ... packed 6 per byte, most significant bit
// first, zero-padded, each byte offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);  // accepts an optional >>graph6<< header

// Plain text: "n m" header line, then one "u v" line per edge, 0-indexed,
// u < v, edges sorted.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// Extension picks the format: .g6 -> graph6, anything else -> edge list.
// Reading falls back to content sniffing when the extension is unknown.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path, const std::string& format = "");

}  // namespace ug
