#ifndef RAINBOW_GRAPH_IO_HPP
#define RAINBOW_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// graph6: one printable line per graph, upper-triangle bits packed into 6-bit
// groups offset by 63, column by column (pair (i,j), i<j, has bit j(j-1)/2+i).
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing whitespace. Strict
// otherwise: bad characters, wrong length, or nonzero padding are rejected.
Graph from_graph6(const std::string& line);

// Plain-text fallback: first line "n m", then one "u v" line per edge.
std::string to_adjacency_text(const Graph& g);
Graph from_adjacency_text(const std::string& text);

Graph read_graph_file(const std::string& path);  // by extension: .g6 or text
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace rainbow

#endif
