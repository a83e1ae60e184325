#include "gamecrit/independence_game.hpp"

#include <cstdint>
#include <stdexcept>

#include "gamecrit/canonical.hpp"
#include "gamecrit/transposition.hpp"
#include "state_key.hpp"

namespace gamecrit {

namespace {

// Group-size cap for the one-off root orbit computation. More generous than
// the per-node symmetry cap because it is paid once per solve.
constexpr std::size_t kRootOrbitCap = std::size_t{1} << 17;

struct IndepKey {
  VertexSet finished = 0;
  VertexSet round = 0;
  std::uint8_t mover = 0;
  bool operator==(const IndepKey&) const = default;
};

struct IndepKeyHash {
  std::size_t operator()(const IndepKey& k) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 0x100000001b3ULL;
    };
    mix(k.finished);
    mix(k.round);
    mix(k.mover);
    return static_cast<std::size_t>(h);
  }
};

VertexSet permute_mask(VertexSet m, const Permutation& perm) {
  VertexSet out = 0;
  while (m != 0) {
    const int v = first_vertex(m);
    m &= m - 1;
    out |= bit(perm[v]);
  }
  return out;
}

class IndepEngine {
 public:
  IndepEngine(const Graph& g, IndepVariant variant, const SolveOptions& opts)
      : g_(g),
        variant_(variant),
        opts_(opts),
        sym_(detail::SymmetryContext::build(g, opts)),
        memo_(opts.table_capacity) {}

  // Rounds still to be opened or finished, counting the current partial
  // round. Alice minimizes, Bob maximizes; moves are compulsory.
  int solve(VertexSet finished, VertexSet round, IndepMover mover) {
    const VertexSet uncolored = full_set(g_.order()) & ~(finished | round);
    VertexSet blocked = 0;
    for (VertexSet m = round; m != 0; m &= m - 1) blocked |= g_.neighbors(first_vertex(m));
    const VertexSet legal = uncolored & ~blocked;

    if (legal == 0) {
      if (uncolored == 0) return round != 0 ? 1 : 0;
      // Round closes. Under A Alice opens the next one; under AB the
      // mover who just found no legal vertex keeps the turn.
      const IndepMover opener = variant_ == IndepVariant::A ? IndepMover::Alice : mover;
      return 1 + solve(finished | round, 0, opener);
    }

    const IndepKey key = canonical_key(finished, round, mover);
    if (auto hit = memo_.lookup(key)) {
      ++stats_.memo_hits;
      return *hit;
    }
    if (++stats_.states_expanded > opts_.state_budget) throw BudgetExceeded(opts_.state_budget);

    const bool minimizing = mover == IndepMover::Alice;
    const IndepMover next = minimizing ? IndepMover::Bob : IndepMover::Alice;
    int best = minimizing ? g_.order() + 1 : -1;
    for (VertexSet m = legal; m != 0; m &= m - 1) {
      const int v = first_vertex(m);
      const int value = solve(finished, round | bit(v), next);
      if (minimizing ? value < best : value > best) best = value;
    }

    memo_.store(key, best);
    return best;
  }

  SolveStats stats_;

 private:
  IndepKey canonical_key(VertexSet finished, VertexSet round, IndepMover mover) const {
    IndepKey best{finished, round, static_cast<std::uint8_t>(mover)};
    for (const auto& perm : sym_.perms) {
      const IndepKey cand{permute_mask(finished, perm), permute_mask(round, perm),
                          best.mover};
      if (cand.finished < best.finished ||
          (cand.finished == best.finished && cand.round < best.round)) {
        best = cand;
      }
    }
    return best;
  }

  const Graph& g_;
  IndepVariant variant_;
  SolveOptions opts_;
  detail::SymmetryContext sym_;
  TranspositionTable<IndepKey, int, IndepKeyHash> memo_;
};

}  // namespace

VertexSet legal_round_moves(const Graph& g, const IndepGameState& state) {
  VertexSet blocked = 0;
  for (VertexSet m = state.round_class; m != 0; m &= m - 1) {
    blocked |= g.neighbors(first_vertex(m));
  }
  return full_set(g.order()) & ~(state.finished | state.round_class) & ~blocked;
}

int game_value(const Graph& g, IndepVariant variant, std::optional<int> first_move,
               const SolveOptions& opts, SolveStats* stats) {
  IndepEngine engine(g, variant, opts);
  int value = 0;
  if (first_move) {
    if (*first_move < 0 || *first_move >= g.order()) {
      throw std::out_of_range("first_move vertex out of range");
    }
    value = engine.solve(0, bit(*first_move), IndepMover::Bob);
  } else if (g.order() == 0) {
    value = 0;
  } else {
    // Alice's opening choices collapse to one vertex per automorphism
    // orbit; she minimizes over the representatives.
    value = g.order() + 1;
    for (const VertexSet orbit : automorphism_orbits(g, kRootOrbitCap)) {
      const int sub = engine.solve(0, bit(first_vertex(orbit)), IndepMover::Bob);
      if (sub < value) value = sub;
    }
  }
  if (stats != nullptr) stats->absorb(engine.stats_);
  return value;
}

int chi_ig_a(const Graph& g, const SolveOptions& opts, SolveStats* stats) {
  return game_value(g, IndepVariant::A, {}, opts, stats);
}

int chi_ig_ab(const Graph& g, const SolveOptions& opts, SolveStats* stats) {
  return game_value(g, IndepVariant::AB, {}, opts, stats);
}

}  // namespace gamecrit
