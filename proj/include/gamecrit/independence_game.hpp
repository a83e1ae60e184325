#pragma once

#include <optional>

#include "gamecrit/graph.hpp"
#include "gamecrit/solver_common.hpp"

namespace gamecrit {

// Round-start rule of the independence coloring game. Round 1 always
// belongs to the first player (Alice). Under A she also starts every
// later round; under AB the player whose turn it was when the round
// closed keeps the move, i.e. turn order continues across rounds.
enum class IndepVariant { A, AB };

enum class IndepMover { Alice, Bob };

struct IndepGameState {
  VertexSet finished = 0;     // colored in completed rounds
  VertexSet round_class = 0;  // colored in the current round
  IndepMover mover = IndepMover::Alice;
};

// Uncolored vertices that may still join the current round: not adjacent
// to anything already in it.
VertexSet legal_round_moves(const Graph& g, const IndepGameState& state);

// Exact number of rounds under optimal play (Alice minimizes, Bob
// maximizes; moves are compulsory while any legal vertex exists). 0 for
// the empty graph. With first_move set, evaluates the game after Alice
// opens on that vertex.
int game_value(const Graph& g, IndepVariant variant, std::optional<int> first_move = {},
               const SolveOptions& opts = {}, SolveStats* stats = nullptr);

int chi_ig_a(const Graph& g, const SolveOptions& opts = {}, SolveStats* stats = nullptr);
int chi_ig_ab(const Graph& g, const SolveOptions& opts = {}, SolveStats* stats = nullptr);

}  // namespace gamecrit
