#include "gamecrit/coloring_game.hpp"

#include <stdexcept>

#include "gamecrit/canonical.hpp"
#include "gamecrit/transposition.hpp"
#include "state_key.hpp"

namespace gamecrit {

namespace {

using detail::ClassKey;
using detail::ClassKeyHash;

// Group-size cap for the one-off root orbit computation. More generous than
// the per-node symmetry cap because it is paid once per solve.
constexpr std::size_t kRootOrbitCap = std::size_t{1} << 17;

std::uint64_t full_color_mask(int k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Shared engine behind alice_wins and best_move. Tracks, per vertex, how
// many neighbors carry each color so blocked-vertex checks are O(1) per
// vertex and moves undo cleanly.
class ChigEngine {
 public:
  ChigEngine(const Graph& g, int k, const SolveOptions& opts, SolveStats& stats)
      : g_(g),
        n_(g.order()),
        k_(k),
        opts_(opts),
        stats_(stats),
        sym_(detail::SymmetryContext::build(g, opts)),
        table_(opts.table_capacity) {
    colors_.assign(n_, 0);
    class_size_.assign(k_ + 1, 0);
    used_.assign(n_, 0);
    for (auto& row : neighbor_count_) row.fill(0);
  }

  void place(int v, int c) {
    colors_[v] = static_cast<std::uint8_t>(c);
    ++class_size_[c];
    for (VertexSet s = g_.neighbors(v); s; s &= s - 1) {
      int u = first_vertex(s);
      if (neighbor_count_[u][c]++ == 0) used_[u] |= std::uint64_t{1} << (c - 1);
    }
  }

  void unplace(int v) {
    int c = colors_[v];
    colors_[v] = 0;
    --class_size_[c];
    for (VertexSet s = g_.neighbors(v); s; s &= s - 1) {
      int u = first_vertex(s);
      if (--neighbor_count_[u][c] == 0) used_[u] &= ~(std::uint64_t{1} << (c - 1));
    }
  }

  bool move_is_legal(int v, int c) const {
    return v >= 0 && v < n_ && c >= 1 && c <= k_ && colors_[v] == 0 &&
           (used_[v] & (std::uint64_t{1} << (c - 1))) == 0;
  }

  std::uint64_t legal_mask(int v) const { return full_color_mask(k_) & ~used_[v]; }

  // Load an externally supplied position (for best_move).
  void load(const std::vector<std::uint8_t>& colors) {
    int placed = 0;
    for (int v = 0; v < n_; ++v)
      if (colors[v]) {
        place(v, colors[v]);
        ++placed;
      }
    colored_ = placed;
  }

  int colored() const { return colored_; }

  bool solve_child(int v, int c) {
    place(v, c);
    ++colored_;
    bool result = solve();
    --colored_;
    unplace(v);
    return result;
  }

  bool solve() {
    if (colored_ == n_) return true;
    for (int v = 0; v < n_; ++v)
      if (colors_[v] == 0 && legal_mask(v) == 0) return false;

    ClassKey key = detail::canonical_class_key(colors_, n_, -1, sym_);
    if (auto hit = table_.lookup(key)) {
      ++stats_.memo_hits;
      return *hit;
    }
    if (++stats_.states_expanded > opts_.state_budget)
      throw BudgetExceeded(opts_.state_budget);

    bool alice = (colored_ % 2 == 0);
    bool result = !alice;
    // Colors whose class is empty are interchangeable; trying the lowest
    // unused one is enough.
    std::uint64_t fresh = 0;
    for (int c = 1; c <= k_; ++c)
      if (class_size_[c] == 0) {
        fresh = std::uint64_t{1} << (c - 1);
        break;
      }
    for (int v = 0; v < n_ && result != alice; ++v) {
      if (colors_[v] != 0) continue;
      std::uint64_t mask = legal_mask(v);
      std::uint64_t candidates = 0;
      for (int c = 1; c <= k_; ++c)
        if (class_size_[c] > 0) candidates |= std::uint64_t{1} << (c - 1);
      candidates = (candidates & mask) | (fresh & mask);
      for (std::uint64_t m = candidates; m; m &= m - 1) {
        int c = std::countr_zero(m) + 1;
        bool sub = solve_child(v, c);
        if (sub == alice) {
          result = alice;
          break;
        }
      }
    }
    table_.store(key, result);
    return result;
  }

 private:
  const Graph& g_;
  int n_;
  int k_;
  const SolveOptions& opts_;
  SolveStats& stats_;
  detail::SymmetryContext sym_;
  TranspositionTable<ClassKey, bool, ClassKeyHash> table_;

  std::vector<std::uint8_t> colors_;
  std::vector<int> class_size_;
  std::vector<std::uint64_t> used_;  // per vertex: colors on its neighborhood
  std::array<std::array<std::uint8_t, kMaxOrder + 1>, kMaxOrder> neighbor_count_{};
  int colored_ = 0;
};

}  // namespace

ColoringState make_coloring_state(const Graph& g, std::vector<std::uint8_t> colors, int k) {
  if (static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("coloring size does not match the graph order");
  if (k < 0 || k > kMaxOrder) throw std::invalid_argument("palette size out of range");
  for (int v = 0; v < g.order(); ++v) {
    if (colors[v] > k) throw std::invalid_argument("color out of palette range");
    if (colors[v] == 0) continue;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1)
      if (colors[first_vertex(s)] == colors[v])
        throw std::invalid_argument("coloring is not proper");
  }
  return ColoringState{std::move(colors), k};
}

std::uint64_t legal_colors(const Graph& g, const ColoringState& state, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("legal_colors: vertex out of range");
  if (state.colors[v] != 0) throw std::invalid_argument("legal_colors: vertex already colored");
  if (state.k < 1 || state.k > 64) throw std::invalid_argument("legal_colors: k out of range");
  std::uint64_t used = 0;
  for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
    std::uint8_t c = state.colors[first_vertex(s)];
    if (c) used |= std::uint64_t{1} << (c - 1);
  }
  return full_color_mask(state.k) & ~used;
}

bool alice_wins(const Graph& g, int k, std::optional<Move> first_move,
                const SolveOptions& opts, SolveStats* stats) {
  if (k < 1) throw std::invalid_argument("alice_wins requires k >= 1");
  SolveStats local;
  SolveStats& st = stats ? *stats : local;

  if (first_move) {
    // The opening position is empty, so legality is just a range check.
    if (first_move->vertex < 0 || first_move->vertex >= g.order() || first_move->color < 1 ||
        first_move->color > k)
      throw std::invalid_argument("illegal forced first move");
  }
  // With more colors than the maximum degree no vertex can ever lose its
  // last legal color, so the first player wins however play goes.
  if (k >= g.max_degree() + 1) return true;

  ChigEngine engine(g, k, opts, st);
  if (first_move) return engine.solve_child(first_move->vertex, first_move->color);
  // Opening moves that differ by an automorphism or a color relabeling lead
  // to isomorphic positions, so one vertex per orbit, colored 1, decides.
  for (const VertexSet orbit : automorphism_orbits(g, kRootOrbitCap)) {
    if (engine.solve_child(first_vertex(orbit), 1)) return true;
  }
  return false;
}

int chi_g(const Graph& g, const SolveOptions& opts, SolveStats* stats) {
  if (g.order() == 0) return 0;
  int low = chromatic_number(g);
  int high = g.max_degree() + 1;
  for (int k = low; k <= high; ++k)
    if (alice_wins(g, k, std::nullopt, opts, stats)) return k;
  return high;  // unreachable: k = high always wins
}

Move best_move(const Graph& g, const ColoringState& state, const SolveOptions& opts,
               SolveStats* stats) {
  ColoringState checked = make_coloring_state(g, state.colors, state.k);
  if (checked.k < 1) throw std::invalid_argument("best_move requires k >= 1");
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  ChigEngine engine(g, checked.k, opts, st);
  engine.load(checked.colors);
  if (engine.colored() == g.order()) throw std::invalid_argument("best_move: terminal state");
  for (int v = 0; v < g.order(); ++v)
    if (checked.colors[v] == 0 && engine.legal_mask(v) == 0)
      throw std::invalid_argument("best_move: terminal state");

  // Whichever side moves, a move is optimal iff its child value equals the
  // state value: the winner has such a child by definition, and for the
  // loser every move qualifies.
  bool target = engine.solve();
  for (int v = 0; v < g.order(); ++v) {
    if (checked.colors[v] != 0) continue;
    for (std::uint64_t m = engine.legal_mask(v); m; m &= m - 1) {
      int c = std::countr_zero(m) + 1;
      if (engine.solve_child(v, c) == target) return Move{v, c};
    }
  }
  throw std::logic_error("best_move: no move matches the minimax value");
}

}  // namespace gamecrit
