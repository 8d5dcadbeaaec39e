#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "chromadisc/graph.hpp"

namespace chromadisc {

// Parses one graph6 record (no trailing newline). Throws ParseError.
Graph parse_graph6(std::string_view text);

// Encodes g in graph6; orders above 62 use the four-byte '~' header.
std::string write_graph6(const Graph& g);

// Reads one record per non-blank line; an optional ">>graph6<<" prefix on
// the first record is accepted.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Edge-list text: first line "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace chromadisc
