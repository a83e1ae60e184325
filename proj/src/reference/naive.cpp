#include "gamecrit/reference/naive.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gamecrit::reference {

namespace {

bool all_colored(const std::vector<int>& colors) {
  return std::find(colors.begin(), colors.end(), 0) == colors.end();
}

bool color_legal(const Graph& g, const std::vector<int>& colors, int v, int c) {
  for (VertexSet m = g.neighbors(v); m != 0; m &= m - 1) {
    if (colors[static_cast<std::size_t>(first_vertex(m))] == c) return false;
  }
  return true;
}

bool has_legal_color(const Graph& g, const std::vector<int>& colors, int v, int k) {
  for (int c = 1; c <= k; ++c) {
    if (color_legal(g, colors, v, c)) return true;
  }
  return false;
}

// Somebody's turn in the coloring game; Alice moves on even move counts.
bool chig_walk(const Graph& g, int k, std::vector<int>& colors, int moves_made) {
  if (all_colored(colors)) return true;
  for (int v = 0; v < g.order(); ++v) {
    if (colors[static_cast<std::size_t>(v)] == 0 && !has_legal_color(g, colors, v, k)) {
      return false;
    }
  }
  const bool alice = moves_made % 2 == 0;
  for (int v = 0; v < g.order(); ++v) {
    if (colors[static_cast<std::size_t>(v)] != 0) continue;
    for (int c = 1; c <= k; ++c) {
      if (!color_legal(g, colors, v, c)) continue;
      colors[static_cast<std::size_t>(v)] = c;
      const bool win = chig_walk(g, k, colors, moves_made + 1);
      colors[static_cast<std::size_t>(v)] = 0;
      if (alice && win) return true;
      if (!alice && !win) return false;
    }
  }
  return !alice;
}

// Ann selects, Ben colors adversarially.
bool chii_walk(const Graph& g, int k, std::vector<int>& colors) {
  if (all_colored(colors)) return true;
  for (int v = 0; v < g.order(); ++v) {
    if (colors[static_cast<std::size_t>(v)] == 0 && !has_legal_color(g, colors, v, k)) {
      return false;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (colors[static_cast<std::size_t>(v)] != 0) continue;
    bool every_answer_loses_for_ben = true;
    for (int c = 1; c <= k; ++c) {
      if (!color_legal(g, colors, v, c)) continue;
      colors[static_cast<std::size_t>(v)] = c;
      const bool ann_wins_after = chii_walk(g, k, colors);
      colors[static_cast<std::size_t>(v)] = 0;
      if (!ann_wins_after) {
        every_answer_loses_for_ben = false;
        break;
      }
    }
    if (every_answer_loses_for_ben) return true;
  }
  return false;
}

int indep_walk(const Graph& g, IndepVariant variant, VertexSet finished, VertexSet round,
               bool alice_to_move) {
  const VertexSet uncolored = full_set(g.order()) & ~(finished | round);
  VertexSet blocked = 0;
  for (VertexSet m = round; m != 0; m &= m - 1) blocked |= g.neighbors(first_vertex(m));
  const VertexSet legal = uncolored & ~blocked;

  if (legal == 0) {
    if (uncolored == 0) return round != 0 ? 1 : 0;
    const bool opener = variant == IndepVariant::A ? true : alice_to_move;
    return 1 + indep_walk(g, variant, finished | round, 0, opener);
  }

  int best = alice_to_move ? g.order() + 1 : -1;
  for (VertexSet m = legal; m != 0; m &= m - 1) {
    const int v = first_vertex(m);
    const int value = indep_walk(g, variant, finished, round | bit(v), !alice_to_move);
    if (alice_to_move ? value < best : value > best) best = value;
  }
  return best;
}

}  // namespace

bool naive_alice_wins(const Graph& g, int k, std::optional<Move> first_move) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  int moves_made = 0;
  if (first_move) {
    if (first_move->vertex < 0 || first_move->vertex >= g.order()) {
      throw std::out_of_range("forced move vertex out of range");
    }
    if (first_move->color < 1 || first_move->color > k) {
      throw std::out_of_range("forced move color out of range");
    }
    colors[static_cast<std::size_t>(first_move->vertex)] = first_move->color;
    moves_made = 1;
  }
  return chig_walk(g, k, colors, moves_made);
}

int naive_chi_g(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1; k <= g.order(); ++k) {
    if (naive_alice_wins(g, k)) return k;
  }
  throw std::logic_error("no winning color count found");
}

bool naive_ann_wins(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  return chii_walk(g, k, colors);
}

int naive_chi_i(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1; k <= g.order(); ++k) {
    if (naive_ann_wins(g, k)) return k;
  }
  throw std::logic_error("no winning color count found");
}

int naive_game_value(const Graph& g, IndepVariant variant, std::optional<int> first_move) {
  if (!first_move) return indep_walk(g, variant, 0, 0, true);
  if (*first_move < 0 || *first_move >= g.order()) {
    throw std::out_of_range("first_move vertex out of range");
  }
  return indep_walk(g, variant, 0, bit(*first_move), false);
}

bool naive_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  if (n == 0) return true;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u) {
      for (int v = u + 1; v < n && match; ++v) {
        if (a.has_edge(u, v) !=
            b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
          match = false;
        }
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gamecrit::reference
