#pragma once

#include <optional>

#include "gamecrit/coloring_game.hpp"
#include "gamecrit/graph.hpp"
#include "gamecrit/independence_game.hpp"

namespace gamecrit::reference {

// Deliberately plain game-tree walks: no memoization, no symmetry
// reduction, no degree fast paths. They restate the game rules from
// scratch so the optimized engines have something independent to agree
// with at small orders.

bool naive_alice_wins(const Graph& g, int k, std::optional<Move> first_move = {});
int naive_chi_g(const Graph& g);

bool naive_ann_wins(const Graph& g, int k);
int naive_chi_i(const Graph& g);

int naive_game_value(const Graph& g, IndepVariant variant, std::optional<int> first_move = {});

// Exhaustive permutation search; intended for cross-checking canonical
// forms at small orders.
bool naive_isomorphic(const Graph& a, const Graph& b);

}  // namespace gamecrit::reference
