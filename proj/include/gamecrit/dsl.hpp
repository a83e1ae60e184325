#pragma once

#include <string_view>

#include "gamecrit/graph.hpp"

namespace gamecrit {

// Named-graph expressions, case-sensitive:
//   P<n> | C<n> | K<n> | K<m>,<n> | KmM<n>
//   | cone(<expr>) | union(<expr>,<expr>) | glue(<expr>,<expr>)
//   | C4plus | fig1
// KmM<n> is K_{n,n} minus a perfect matching; glue identifies universal
// vertices. Whitespace between tokens is ignored. Throws
// std::invalid_argument with a position diagnostic on bad input.
Graph parse_graph_spec(std::string_view text);

// CLI argument form: tries the DSL first, then graph6.
Graph parse_graph_argument(std::string_view text);

}  // namespace gamecrit
