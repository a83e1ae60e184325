#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gamecrit/graph.hpp"
#include "gamecrit/solver_common.hpp"

namespace gamecrit {

struct Move {
  int vertex = -1;
  int color = 0;  // 1-based
  bool operator==(const Move&) const = default;
};

// Partial proper coloring plus palette size. The mover is implied by
// parity: an even number of colored vertices means the first player is
// to move.
struct ColoringState {
  std::vector<std::uint8_t> colors;  // 0 = uncolored, else 1..k
  int k = 0;
};

// Validates sizes, the color range, and properness.
ColoringState make_coloring_state(const Graph& g, std::vector<std::uint8_t> colors, int k);

// Bitmask of colors still proper at the uncolored vertex v (bit c-1 for
// color c). Requires k <= 64.
std::uint64_t legal_colors(const Graph& g, const ColoringState& state, int v);

// Exact win test for the two-player coloring game with k colors: players
// alternate proper moves starting with the first player, nobody may pass,
// and the second player wins the moment some uncolored vertex has every
// color in its neighborhood. With first_move set, evaluates the game
// after that prescribed opening move (throws if the move is not legal).
bool alice_wins(const Graph& g, int k, std::optional<Move> first_move = {},
                const SolveOptions& opts = {}, SolveStats* stats = nullptr);

// Minimum k for which alice_wins holds; each k in [chromatic number,
// max degree + 1] is tested independently in ascending order. 0 for the
// empty graph.
int chi_g(const Graph& g, const SolveOptions& opts = {}, SolveStats* stats = nullptr);

// A move attaining the state's minimax value; ties break toward the
// lowest vertex index, then the lowest color. Throws on terminal states
// (everything colored, or some vertex already blocked).
Move best_move(const Graph& g, const ColoringState& state,
               const SolveOptions& opts = {}, SolveStats* stats = nullptr);

}  // namespace gamecrit
