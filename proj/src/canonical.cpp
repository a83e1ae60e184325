#include "gamecrit/canonical.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "gamecrit/graph6.hpp"

namespace gamecrit {

namespace {

using CellList = std::vector<VertexSet>;

// Equitable refinement: split cells by neighbor counts toward every cell
// until stable. Fragments are ordered by count, so the outcome is
// invariant under relabeling.
CellList refine(const Graph& g, CellList cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t wi = 0; wi < cells.size() && !changed; ++wi) {
      for (size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        if (set_size(cells[ci]) <= 1) continue;
        std::map<int, VertexSet> buckets;
        for (VertexSet s = cells[ci]; s; s &= s - 1) {
          int v = first_vertex(s);
          buckets[set_size(g.neighbors(v) & cells[wi])] |= bit(v);
        }
        if (buckets.size() > 1) {
          CellList next(cells.begin(), cells.begin() + ci);
          for (auto& [count, members] : buckets) next.push_back(members);
          next.insert(next.end(), cells.begin() + ci + 1, cells.end());
          cells = std::move(next);
          changed = true;
        }
      }
    }
  }
  return cells;
}

int first_non_singleton(const CellList& cells) {
  for (size_t i = 0; i < cells.size(); ++i)
    if (set_size(cells[i]) > 1) return static_cast<int>(i);
  return -1;
}

// Packs the upper triangle of g relabeled by inv (inv[new] = old) into
// 6-bit groups and compares against the best encoding found so far.
// Returns true and fills best when the candidate is strictly smaller or
// best is empty.
bool pack_if_minimal(const Graph& g, const std::vector<int>& inv, std::string& best) {
  int n = g.order();
  std::string body;
  body.reserve(best.size());
  int group = 0, filled = 0;
  bool strictly_less = best.empty();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int edge = static_cast<int>((g.neighbors(inv[i]) >> inv[j]) & 1);
      group = (group << 1) | edge;
      if (++filled == 6) {
        char c = static_cast<char>(group);
        if (!strictly_less && !best.empty()) {
          char ref = best[body.size()];
          if (c > ref) return false;
          if (c < ref) strictly_less = true;
        }
        body.push_back(c);
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) {
    char c = static_cast<char>(group << (6 - filled));
    if (!strictly_less && !best.empty()) {
      char ref = best[body.size()];
      if (c > ref) return false;
      if (c < ref) strictly_less = true;
    }
    body.push_back(c);
  }
  if (!strictly_less) return false;  // equal to current best
  best = std::move(body);
  return true;
}

// budget counts search-tree nodes; exhausting it flips aborted and the
// search unwinds without completing, so best is then untrustworthy.
void canon_search(const Graph& g, const CellList& cells, std::string& best, std::size_t& budget,
                  bool& aborted) {
  if (aborted) return;
  if (budget == 0) {
    aborted = true;
    return;
  }
  --budget;
  int target = first_non_singleton(cells);
  if (target < 0) {
    std::vector<int> inv(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) inv[i] = first_vertex(cells[i]);
    pack_if_minimal(g, inv, best);
    return;
  }
  for (VertexSet s = cells[target]; s && !aborted; s &= s - 1) {
    int v = first_vertex(s);
    CellList split(cells.begin(), cells.begin() + target);
    split.push_back(bit(v));
    split.push_back(cells[target] & ~bit(v));
    split.insert(split.end(), cells.begin() + target + 1, cells.end());
    canon_search(g, refine(g, split), best, budget, aborted);
  }
}

std::string graph6_from_packed(int n, const std::string& body) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  for (char c : body) out.push_back(static_cast<char>(c + 63));
  return out;
}

struct AutSearch {
  const Graph& g;
  std::vector<int> cell_of;        // refined cell index per vertex
  std::vector<int> image;          // partial map
  VertexSet used = 0;
  std::size_t cap;
  bool aborted = false;
  std::vector<Permutation> found;

  AutSearch(const Graph& graph, std::size_t max_size) : g(graph), cap(max_size) {
    CellList cells = refine(g, g.order() ? CellList{g.vertices()} : CellList{});
    cell_of.assign(g.order(), 0);
    for (size_t i = 0; i < cells.size(); ++i)
      for (VertexSet s = cells[i]; s; s &= s - 1) cell_of[first_vertex(s)] = static_cast<int>(i);
    image.assign(g.order(), -1);
  }

  VertexSet cell_mask(int cell) const {
    VertexSet m = 0;
    for (int v = 0; v < g.order(); ++v)
      if (cell_of[v] == cell) m |= bit(v);
    return m;
  }

  void run() {
    if (g.order() == 0) {
      found.push_back({});
      return;
    }
    descend(0);
  }

  void descend(int v) {
    if (aborted) return;
    int n = g.order();
    if (v == n) {
      found.push_back(image);
      if (found.size() > cap) aborted = true;
      return;
    }
    // Images of earlier vertices adjacent / non-adjacent to v constrain
    // the image of v.
    VertexSet required = 0, forbidden = 0;
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v))
        required |= bit(image[u]);
      else
        forbidden |= bit(image[u]);
    }
    for (VertexSet s = cell_mask(cell_of[v]) & ~used; s; s &= s - 1) {
      int w = first_vertex(s);
      if ((g.neighbors(w) & required) != required) continue;
      if (g.neighbors(w) & forbidden) continue;
      image[v] = w;
      used |= bit(w);
      descend(v + 1);
      used &= ~bit(w);
      image[v] = -1;
      if (aborted) return;
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  int n = g.order();
  if (n == 0) return emit_graph6(g);
  std::string best;
  std::size_t budget = std::numeric_limits<std::size_t>::max();
  bool aborted = false;
  canon_search(g, refine(g, CellList{g.vertices()}), best, budget, aborted);
  return graph6_from_packed(n, best);
}

std::optional<std::string> canonical_form_capped(const Graph& g, std::size_t max_nodes) {
  int n = g.order();
  if (n == 0) return emit_graph6(g);
  std::string best;
  std::size_t budget = max_nodes;
  bool aborted = false;
  canon_search(g, refine(g, CellList{g.vertices()}), best, budget, aborted);
  if (aborted) return std::nullopt;
  return graph6_from_packed(n, best);
}

std::vector<Permutation> automorphism_group(const Graph& g) {
  AutSearch search(g, std::numeric_limits<std::size_t>::max());
  search.run();
  return std::move(search.found);
}

std::vector<Permutation> automorphism_group_capped(const Graph& g, std::size_t max_size) {
  AutSearch search(g, max_size);
  search.run();
  if (search.aborted) return {};
  return std::move(search.found);
}

namespace {

std::vector<VertexSet> orbits_of_group(int order, const std::vector<Permutation>& group) {
  std::vector<int> root(order);
  for (int v = 0; v < order; ++v) root[v] = v;
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Permutation& perm : group)
    for (int v = 0; v < order; ++v) {
      int a = find(v), b = find(perm[v]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, VertexSet> orbits;
  for (int v = 0; v < order; ++v) orbits[find(v)] |= bit(v);
  std::vector<VertexSet> result;
  for (auto& [rep, members] : orbits) result.push_back(members);
  return result;
}

}  // namespace

std::vector<VertexSet> automorphism_orbits(const Graph& g) {
  return orbits_of_group(g.order(), automorphism_group(g));
}

std::vector<VertexSet> automorphism_orbits(const Graph& g, std::size_t max_group_size) {
  // An aborted group enumeration yields the empty group, whose orbits
  // are singletons — a sound (if unhelpful) refinement.
  return orbits_of_group(g.order(), automorphism_group_capped(g, max_group_size));
}

}  // namespace gamecrit
