#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kdmv/graph.hpp"

namespace kdmv {

/// Decodes one graph6 line (short form for n < 63, 126-prefixed long form
/// otherwise). Surrounding whitespace is ignored; an optional ">>graph6<<"
/// header is accepted.
///
/// Throws ParseError on a malformed header, wrong length, characters outside
/// [63, 126] or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding of the given labeling.
std::string to_graph6(const Graph& g);

/// Reads every non-empty, non-comment line of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Edge-list fixture format: "n m" followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace kdmv
