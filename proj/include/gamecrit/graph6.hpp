#pragma once

#include <string>
#include <string_view>

#include "gamecrit/graph.hpp"

namespace gamecrit {

// Standard graph6 text encoding of simple undirected graphs: the order as
// value+63 bytes (one byte for n <= 62, '~' plus three bytes above that),
// then the upper triangle of the adjacency matrix column by column,
// x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian into 6-bit groups and
// zero padded. Throws std::invalid_argument on malformed input.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace gamecrit
