#include "doctest.h"
#include "gamecrit/graph.hpp"
#include "gamecrit/indicated_game.hpp"

#include <stdexcept>

using namespace gamecrit;

TEST_CASE("indicated chromatic number of small knowns") {
  CHECK(chi_i(Graph(0)) == 0);
  CHECK(chi_i(empty_graph(3)) == 1);
  CHECK(chi_i(complete(2)) == 2);
  CHECK(chi_i(complete(5)) == 5);
  // Paths and even cycles: select along the line, every later color is
  // forced, so two colors suffice.
  CHECK(chi_i(path(2)) == 2);
  CHECK(chi_i(path(7)) == 2);
  CHECK(chi_i(cycle(4)) == 2);
  CHECK(chi_i(cycle(6)) == 2);
  // Odd cycles need three.
  CHECK(chi_i(cycle(3)) == 3);
  CHECK(chi_i(cycle(5)) == 3);
  CHECK(chi_i(cycle(7)) == 3);
  CHECK(chi_i(complete_bipartite(3, 3)) == 2);
  CHECK(chi_i(star(4)) == 2);
}

TEST_CASE("win test brackets the indicated chromatic number") {
  CHECK(!ann_wins(cycle(5), 2));
  CHECK(ann_wins(cycle(5), 3));
  CHECK(!ann_wins(complete(3), 2));
  CHECK_THROWS_AS(ann_wins(path(2), 0), std::invalid_argument);
}

TEST_CASE("the example graph needs only three colors") {
  CHECK(chi_i(fig1_graph()) == 3);
}

TEST_CASE("monotone in the palette on the checked window") {
  // Winning with k colors implies winning with k+1 on these graphs.
  for (const Graph& g : {cycle(5), path(6), complete(4)}) {
    for (int k = 1; k + 1 <= g.max_degree() + 1; ++k) {
      if (ann_wins(g, k)) CHECK(ann_wins(g, k + 1));
    }
  }
}

TEST_CASE("solver options do not change values") {
  for (const Graph& g : {cycle(5), star(4), complete_bipartite(2, 3)}) {
    SolveOptions off;
    off.automorphisms = AutReduction::Off;
    SolveOptions tiny_table;
    tiny_table.table_capacity = 16;
    const int expected = chi_i(g);
    CHECK(chi_i(g, off) == expected);
    CHECK(chi_i(g, tiny_table) == expected);
  }
}

TEST_CASE("state budget interrupts the search") {
  SolveOptions opts;
  opts.state_budget = 1;
  CHECK_THROWS_AS(ann_wins(cycle(6), 2, opts), BudgetExceeded);
}
