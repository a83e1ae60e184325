#include "gamecrit/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gamecrit {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex index out of range: " + std::to_string(v));
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxOrder;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite requires m, n >= 1");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

Graph star(int n) { return complete_bipartite(1, n); }

Graph complete_bipartite_minus_matching(int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("complete_bipartite_minus_matching requires 1 <= n <= 16");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.add_edge(i, n + j);
  return g;
}

Graph cone(const Graph& g) {
  int n = g.order();
  if (n + 1 > kMaxOrder) throw std::invalid_argument("cone would exceed the order cap");
  Graph result(n + 1);
  for (int u = 0; u < n; ++u) {
    for (VertexSet s = g.neighbors(u); s; s &= s - 1)
      if (first_vertex(s) > u) result.add_edge(u, first_vertex(s));
    result.add_edge(u, n);
  }
  return result;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 > kMaxOrder) throw std::invalid_argument("union would exceed the order cap");
  Graph g(n1 + n2);
  for (int u = 0; u < n1; ++u)
    for (VertexSet s = g1.neighbors(u); s; s &= s - 1)
      if (first_vertex(s) > u) g.add_edge(u, first_vertex(s));
  for (int u = 0; u < n2; ++u)
    for (VertexSet s = g2.neighbors(u); s; s &= s - 1)
      if (first_vertex(s) > u) g.add_edge(n1 + u, n1 + first_vertex(s));
  return g;
}

namespace {

int highest_universal_vertex(const Graph& g) {
  for (int v = g.order() - 1; v >= 0; --v)
    if (g.neighbors(v) == (g.vertices() & ~bit(v))) return v;
  return -1;
}

}  // namespace

Graph identify_universal_pair(const Graph& g1, const Graph& g2) {
  int u = highest_universal_vertex(g1);
  int v = highest_universal_vertex(g2);
  if (u < 0 || v < 0)
    throw std::invalid_argument("identify_universal_pair: operand has no universal vertex");
  // Strip the apexes, take the disjoint union, and cone the result; the
  // merged vertex is universal in the union, which is exactly the glue.
  Graph base = disjoint_union(delete_vertex(g1, u), delete_vertex(g2, v));
  return cone(base);
}

Graph c4_plus() {
  Graph result(8);
  for (int i = 0; i < 4; ++i) {
    result.add_edge(i, (i + 1) % 4);
    result.add_edge(i, 4 + i);
  }
  return result;
}

Graph fig1_graph() {
  // Vertices: a=0 b=1 c=2 d=3 e=4 f=5 g=6 h=7 x=8.
  Graph g(9);
  constexpr int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, gg = 6, h = 7, x = 8;
  for (auto [p, q] : {std::pair{a, b}, {b, c}, {c, a}, {h, gg}, {gg, f}, {f, h},
                      {a, gg}, {c, h}, {b, d}, {c, d}, {d, e}, {gg, e}, {f, e},
                      {f, x}, {d, x}, {e, x}})
    g.add_edge(p, q);
  return g;
}

TriApexGraph triple_cone_triangle(int n) {
  if (n < 2) throw std::invalid_argument("triple_cone_triangle requires n >= 2");
  Graph block_u = cone(complete_bipartite_minus_matching(2 * n));
  Graph block_v = cone(complete_bipartite_minus_matching(2 * n + 2));
  Graph g = disjoint_union(disjoint_union(block_u, block_v), block_v);
  int apex_u = block_u.order() - 1;
  int apex_v = block_u.order() + block_v.order() - 1;
  int apex_w = block_u.order() + 2 * block_v.order() - 1;
  g.add_edge(apex_u, apex_v);
  g.add_edge(apex_v, apex_w);
  g.add_edge(apex_u, apex_w);
  return {g, apex_u, apex_v, apex_w};
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("delete_vertex: index out of range");
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::array<int, kMaxOrder> new_index{};
  int n = 0;
  for (VertexSet s = keep; s; s &= s - 1) new_index[first_vertex(s)] = n++;
  Graph result(n);
  for (VertexSet s = keep; s; s &= s - 1) {
    int u = first_vertex(s);
    for (VertexSet t = g.neighbors(u) & keep; t; t &= t - 1) {
      int w = first_vertex(t);
      if (w > u) result.add_edge(new_index[u], new_index[w]);
    }
  }
  return result;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("apply_permutation: size mismatch");
  Graph result(n);
  for (int u = 0; u < n; ++u)
    for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
      int v = first_vertex(s);
      if (v > u) result.add_edge(perm[u], perm[v]);
    }
  return result;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> result;
  VertexSet seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (seen & bit(v)) continue;
    VertexSet comp = bit(v), frontier = bit(v);
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(first_vertex(s));
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    result.push_back(comp);
  }
  return result;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

int distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::out_of_range("distance: index out of range");
  if (u == v) return 0;
  VertexSet reached = bit(u), frontier = bit(u);
  int d = 0;
  while (frontier) {
    ++d;
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(first_vertex(s));
    frontier = next & ~reached;
    if (frontier & bit(v)) return d;
    reached |= frontier;
  }
  return kUnreachable;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::array<int, kMaxOrder> side{};
  side.fill(-1);
  Bipartition result;
  for (int start = 0; start < g.order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
        int v = first_vertex(s);
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < g.order(); ++v)
    (side[v] == 0 ? result.side_x : result.side_y) |= bit(v);
  return result;
}

namespace {

// Backtracking k-colorability test. New colors are introduced in order,
// which kills color permutations of the same partition.
bool colorable(const Graph& g, const std::vector<int>& order, size_t idx,
               std::vector<int>& color, int used, int k) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int limit = std::min(used + 1, k);
  for (int c = 1; c <= limit; ++c) {
    bool clash = false;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1)
      if (color[first_vertex(s)] == c) {
        clash = true;
        break;
      }
    if (clash) continue;
    color[v] = c;
    if (colorable(g, order, idx + 1, color, std::max(used, c), k)) return true;
    color[v] = 0;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  // A greedy clique through the highest-degree vertex seeds the lower bound.
  int lower = 1;
  {
    VertexSet clique = bit(order[0]);
    VertexSet common = g.neighbors(order[0]);
    while (common) {
      int v = first_vertex(common);
      clique |= bit(v);
      common &= g.neighbors(v);
    }
    lower = set_size(clique);
  }
  for (int k = lower; k <= n; ++k) {
    std::vector<int> color(n, 0);
    if (colorable(g, order, 0, color, 0, k)) return k;
  }
  return n;  // unreachable
}

bool has_bipartite_dominating_vertex(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return false;
  auto parts = bipartition(g);
  if (!parts) return false;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet opposite = (parts->side_x & bit(v)) ? parts->side_y : parts->side_x;
    if ((g.neighbors(v) & opposite) == opposite) return true;
  }
  return false;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs(g.order());
  for (int v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

}  // namespace gamecrit
