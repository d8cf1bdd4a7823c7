#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted; anything else malformed throws ParseError carrying
/// the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Reads every non-blank line of a graph6 stream. Errors report the line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace alphax
