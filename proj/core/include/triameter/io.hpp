#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "triameter/graph.hpp"

namespace triameter {

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// line terminators are accepted.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6, using the multi-byte size prefix for n >= 63.
std::string write_graph6(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

/// Edge-list text: an "n m" header line followed by m lines of "u v"
/// (0-indexed). Several graphs may follow each other in one stream.
/// Blank lines and lines starting with '#' are skipped.
std::string write_edge_list(const Graph& g);

/// Reads every graph in the stream. Parse failures raise Errc::SourceParse
/// with the offending 1-based line number in the message.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);

/// Guesses the format from the first meaningful line: edge lists open with a
/// decimal digit, which can never start a graph6 line.
GraphFormat sniff_format(std::string_view first_line);

} // namespace triameter
