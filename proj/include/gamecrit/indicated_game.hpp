#pragma once

#include "gamecrit/graph.hpp"
#include "gamecrit/solver_common.hpp"

namespace gamecrit {

// Exact win test for the indicated coloring game with k colors: the
// selector repeatedly picks an uncolored vertex (her choice), the
// adversary assigns it any proper color (his choice), and the selector
// wins iff the whole graph gets colored. Selecting a vertex with no legal
// color loses immediately.
bool ann_wins(const Graph& g, int k, const SolveOptions& opts = {}, SolveStats* stats = nullptr);

// Minimum k with ann_wins, searched ascending over [chromatic number,
// max degree + 1]; 0 for the empty graph.
int chi_i(const Graph& g, const SolveOptions& opts = {}, SolveStats* stats = nullptr);

}  // namespace gamecrit
