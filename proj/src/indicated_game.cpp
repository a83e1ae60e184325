#include "gamecrit/indicated_game.hpp"

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

class ChiiEngine {
 public:
  ChiiEngine(const Graph& g, int k, const SolveOptions& opts, SolveStats& stats)
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

  bool solve() { return select_phase(); }

  // Root call with the opening selection restricted to one vertex per
  // automorphism orbit; symmetric selections give isomorphic positions.
  bool solve_root(const std::vector<VertexSet>& orbits) {
    if (colored_ == n_) return true;
    for (const VertexSet orbit : orbits)
      if (color_phase(first_vertex(orbit))) return true;
    return false;
  }

 private:
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

  std::uint64_t legal_mask(int v) const {
    std::uint64_t full = k_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1;
    return full & ~used_[v];
  }

  // Selector's turn: she wins when some selection works for her.
  bool select_phase() {
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

    bool result = false;
    for (int v = 0; v < n_ && !result; ++v)
      if (colors_[v] == 0 && color_phase(v)) result = true;
    table_.store(key, result);
    return result;
  }

  // Adversary colors the selected vertex: every legal color must keep the
  // selector winning. Colors in empty classes are interchangeable, so one
  // representative suffices.
  bool color_phase(int v) {
    ClassKey key = detail::canonical_class_key(colors_, n_, v, sym_);
    if (auto hit = table_.lookup(key)) {
      ++stats_.memo_hits;
      return *hit;
    }
    if (++stats_.states_expanded > opts_.state_budget)
      throw BudgetExceeded(opts_.state_budget);

    std::uint64_t fresh = 0;
    for (int c = 1; c <= k_; ++c)
      if (class_size_[c] == 0) {
        fresh = std::uint64_t{1} << (c - 1);
        break;
      }
    std::uint64_t active = 0;
    for (int c = 1; c <= k_; ++c)
      if (class_size_[c] > 0) active |= std::uint64_t{1} << (c - 1);
    std::uint64_t candidates = legal_mask(v) & (active | fresh);

    bool result = true;
    for (std::uint64_t m = candidates; m && result; m &= m - 1) {
      int c = std::countr_zero(m) + 1;
      place(v, c);
      ++colored_;
      if (!select_phase()) result = false;
      --colored_;
      unplace(v);
    }
    table_.store(key, result);
    return result;
  }

  const Graph& g_;
  int n_;
  int k_;
  const SolveOptions& opts_;
  SolveStats& stats_;
  detail::SymmetryContext sym_;
  TranspositionTable<ClassKey, bool, ClassKeyHash> table_;

  std::vector<std::uint8_t> colors_;
  std::vector<int> class_size_;
  std::vector<std::uint64_t> used_;
  std::array<std::array<std::uint8_t, kMaxOrder + 1>, kMaxOrder> neighbor_count_{};
  int colored_ = 0;
};

}  // namespace

bool ann_wins(const Graph& g, int k, const SolveOptions& opts, SolveStats* stats) {
  if (k < 1) throw std::invalid_argument("ann_wins requires k >= 1");
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  // As in the two-player coloring game, more colors than the maximum
  // degree means no vertex can ever be blocked.
  if (k >= g.max_degree() + 1) return true;
  ChiiEngine engine(g, k, opts, st);
  return engine.solve_root(automorphism_orbits(g, kRootOrbitCap));
}

int chi_i(const Graph& g, const SolveOptions& opts, SolveStats* stats) {
  if (g.order() == 0) return 0;
  int low = chromatic_number(g);
  int high = g.max_degree() + 1;
  for (int k = low; k <= high; ++k)
    if (ann_wins(g, k, opts, stats)) return k;
  return high;
}

}  // namespace gamecrit
