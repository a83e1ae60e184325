#include "doctest.h"
#include "gamecrit/canonical.hpp"
#include "gamecrit/graph.hpp"
#include "gamecrit/graph6.hpp"
#include "gamecrit/reference/naive.hpp"

#include <numeric>
#include <random>

using namespace gamecrit;

namespace {

Graph shuffled(const Graph& g, std::mt19937& rng) {
  Permutation perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return apply_permutation(g, perm);
}

}  // namespace

TEST_CASE("canonical form is relabeling invariant") {
  std::mt19937 rng(7);
  for (const Graph& g : {path(6), cycle(7), star(5), complete_bipartite_minus_matching(3),
                         fig1_graph(), c4_plus(), disjoint_union(cycle(3), path(3))}) {
    const std::string form = canonical_form(g);
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(canonical_form(shuffled(g, rng)) == form);
    }
    // The canonical form is itself a valid encoding of the same class.
    CHECK(canonical_form(parse_graph6(form)) == form);
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  // Same order and size, different structure.
  const Graph a = disjoint_union(cycle(3), path(3));  // 6 vertices, 5 edges
  const Graph b = path(6);                            // 6 vertices, 5 edges
  CHECK(a.size() == b.size());
  CHECK(canonical_form(a) != canonical_form(b));
  CHECK(canonical_form(cycle(6)) != canonical_form(disjoint_union(cycle(3), cycle(3))));
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  std::mt19937 rng(11);
  const std::vector<Graph> pool = {path(5),  cycle(5),          star(4),
                                   complete(5), empty_graph(5), complete_bipartite(2, 3),
                                   cycle(4),    path(4)};
  for (const Graph& a : pool) {
    for (const Graph& b : pool) {
      if (a.order() != b.order()) continue;
      const bool iso = reference::naive_isomorphic(a, b);
      CHECK(iso == (canonical_form(a) == canonical_form(b)));
    }
    const Graph s = shuffled(a, rng);
    CHECK(reference::naive_isomorphic(a, s));
    CHECK(canonical_form(a) == canonical_form(s));
  }
}

TEST_CASE("capped canonical form matches the exact one or gives up cleanly") {
  std::mt19937 rng(23);
  for (const Graph& g : {path(6), cycle(7), star(5), complete_bipartite_minus_matching(3),
                         complete(6), fig1_graph()}) {
    const auto capped = canonical_form_capped(g, std::size_t{1} << 20);
    const bool got = capped.has_value();
    CHECK(got);
    if (capped) CHECK(*capped == canonical_form(g));
  }
  // Complete graphs refine to a single cell, so the search tree is
  // factorial and a small cap must trip.
  CHECK_FALSE(canonical_form_capped(complete(12), 1000).has_value());
  CHECK_FALSE(canonical_form_capped(complete_bipartite_minus_matching(10), 1000).has_value());
  // A generous cap on a tiny graph returns the exact form.
  const auto tiny = canonical_form_capped(path(2), 4);
  CHECK(tiny.has_value());
  const std::string tiny_form = tiny.value_or("");
  CHECK(tiny_form == "A_");
  // The zero-order graph needs no search at all.
  CHECK(canonical_form_capped(Graph(0), 1).has_value());
}

TEST_CASE("automorphism group sizes of knowns") {
  CHECK(automorphism_group(path(4)).size() == 2);
  CHECK(automorphism_group(cycle(5)).size() == 10);  // dihedral
  CHECK(automorphism_group(complete(4)).size() == 24);
  CHECK(automorphism_group(star(3)).size() == 6);
  // K_{3,3} minus a matching: permute the pairs, swap the sides.
  CHECK(automorphism_group(complete_bipartite_minus_matching(3)).size() == 12);
}

TEST_CASE("capped group enumeration aborts to empty") {
  const Graph g = complete(5);  // 120 automorphisms
  CHECK(automorphism_group_capped(g, 200).size() == 120);
  CHECK(automorphism_group_capped(g, 100).empty());
}

TEST_CASE("orbits") {
  // Path: ends pair up, middles pair up.
  const auto path_orbits = automorphism_orbits(path(4));
  CHECK(path_orbits.size() == 2);
  CHECK(path_orbits[0] == (bit(0) | bit(3)));
  CHECK(path_orbits[1] == (bit(1) | bit(2)));

  // Vertex-transitive graphs have one orbit.
  CHECK(automorphism_orbits(cycle(6)).size() == 1);
  CHECK(automorphism_orbits(complete(4)).size() == 1);

  // Star: the hub is fixed.
  const auto star_orbits = automorphism_orbits(star(3));
  CHECK(star_orbits.size() == 2);
  CHECK(star_orbits[0] == bit(0));

  // The capped overload degrades to singletons when the cap aborts.
  CHECK(automorphism_orbits(complete(5), 10).size() == 5);
  CHECK(automorphism_orbits(complete(5), 1000).size() == 1);
}
