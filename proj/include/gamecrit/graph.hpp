#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gamecrit {

// Vertices of a graph form a subset of {0, .., kMaxOrder-1}, stored one bit
// per vertex. Everything in this library leans on that: neighborhoods,
// color classes, components and census masks are all VertexSet values.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

// All vertices of an n-vertex graph.
constexpr VertexSet full_set(int n) {
  return n >= kMaxOrder ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Index of the lowest set bit; undefined on 0.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

inline int set_size(VertexSet s) { return std::popcount(s); }

// Simple undirected graph with at most kMaxOrder vertices, represented by
// one adjacency row per vertex. Immutable in spirit: construction helpers
// mutate, everything downstream copies.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const;  // number of edges

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int max_degree() const;
  int min_degree() const;
  VertexSet vertices() const { return full_set(n_); }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};  // rows above n_ stay zero
};

// ---- named families ----

Graph empty_graph(int n);
Graph path(int n);                         // n >= 1
Graph cycle(int n);                        // n >= 3
Graph complete(int n);                     // n >= 1
Graph complete_bipartite(int m, int n);    // sides {0..m-1}, {m..m+n-1}
Graph star(int n);                         // K_{1,n}, center 0

// K_{n,n} minus a perfect matching: sides a_0..a_{n-1} = 0..n-1 and
// b_0..b_{n-1} = n..2n-1, with a_i ~ b_j iff i != j.
Graph complete_bipartite_minus_matching(int n);  // 1 <= n <= 16

// g plus one new universal vertex carrying the highest index.
Graph cone(const Graph& g);

Graph disjoint_union(const Graph& g1, const Graph& g2);

// Merges the highest-indexed universal vertex of g1 with the one of g2.
// Throws if either graph has no universal vertex.
Graph identify_universal_pair(const Graph& g1, const Graph& g2);

// C4 with one pendant neighbor attached to each cycle vertex: cycle
// 0-1-2-3, pendant 4+i attached to i.
Graph c4_plus();

// The 9-vertex graph of the worked chi_i example. Vertices a..h,x get
// indices 0..8; the special vertex x = 8 has neighbors d, e, f.
Graph fig1_graph();
inline constexpr int kFig1X = 8;

// Three disjoint cones, over K_{2n,2n}-M and two copies of K_{2n+2,2n+2}-M,
// with the three apexes joined pairwise into a triangle.
struct TriApexGraph {
  Graph graph;
  int apex_u;  // apex over K_{2n,2n}-M
  int apex_v;  // apex over the first K_{2n+2,2n+2}-M
  int apex_w;  // apex over the second K_{2n+2,2n+2}-M
};
TriApexGraph triple_cone_triangle(int n);  // n >= 2

// ---- surgery ----

// Removes v; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);

Graph induced_subgraph(const Graph& g, VertexSet keep);

// result.has_edge(perm[u], perm[v]) == g.has_edge(u, v)
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// ---- predicates ----

inline constexpr int kUnreachable = -1;

bool is_connected(const Graph& g);  // true for order <= 1
std::vector<VertexSet> components(const Graph& g);
int distance(const Graph& g, int u, int v);  // kUnreachable across components

struct Bipartition {
  VertexSet side_x = 0;
  VertexSet side_y = 0;
};
std::optional<Bipartition> bipartition(const Graph& g);

// Exact chromatic number by branch and bound; 0 for the empty graph.
int chromatic_number(const Graph& g);

// True iff g is connected, bipartite, and some vertex is adjacent to the
// whole opposite side of the bipartition. False for disconnected graphs.
bool has_bipartite_dominating_vertex(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);  // descending

}  // namespace gamecrit
