#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gamecrit/graph.hpp"

namespace gamecrit {

// Canonical form of a graph: the graph6 encoding of its lexicographically
// smallest relabeling. Two graphs are isomorphic iff their canonical forms
// are equal byte strings. Exact for any order, practical up to roughly
// order 10 plus well-structured larger graphs.
std::string canonical_form(const Graph& g);

// Work-capped canonical form: gives up and returns nullopt once the
// labeling search has visited max_nodes search-tree nodes. Highly
// symmetric graphs (complete, complete bipartite minus a matching, ...)
// blow the tree up factorially, so callers that only want a cheap cache
// key can bail instead of stalling. A returned value always equals
// canonical_form(g).
std::optional<std::string> canonical_form_capped(const Graph& g, std::size_t max_nodes);

// perm[v] = image of v.
using Permutation = std::vector<int>;

// The full automorphism group, identity included. Intended for small
// graphs; cost grows with the group order.
std::vector<Permutation> automorphism_group(const Graph& g);

// Stops early and returns an empty vector once more than max_size
// automorphisms exist; solvers then skip symmetry reduction.
std::vector<Permutation> automorphism_group_capped(const Graph& g, std::size_t max_size);

// Orbits of the automorphism group, sorted by lowest member.
std::vector<VertexSet> automorphism_orbits(const Graph& g);

// Orbits of the capped group; singletons when the cap aborts, which is
// always safe to act on (orbits only ever merge under more symmetry).
std::vector<VertexSet> automorphism_orbits(const Graph& g, std::size_t max_group_size);

}  // namespace gamecrit
