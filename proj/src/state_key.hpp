#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gamecrit/canonical.hpp"
#include "gamecrit/graph.hpp"
#include "gamecrit/solver_common.hpp"

namespace gamecrit::detail {

// Memo key for per-vertex-color game states: byte v holds the canonical
// class id of vertex v (0 = uncolored), classes numbered by first
// occurrence so that color names never matter. aux carries solver data
// (selection phase); it must stay below 0xFF for vertex payloads.
struct ClassKey {
  std::array<std::uint64_t, 8> words{};
  std::uint8_t aux = 0;

  bool operator==(const ClassKey&) const = default;
  auto operator<=>(const ClassKey&) const = default;
};

struct ClassKeyHash {
  std::size_t operator()(const ClassKey& k) const {
    std::uint64_t h = 0x243f6a8885a308d3ULL ^ k.aux;
    for (std::uint64_t w : k.words) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

// Automorphisms used for state canonicalization, identity excluded,
// inverses precomputed. Empty when reduction is off or the group is too
// large to enumerate under opts.max_group_size.
struct SymmetryContext {
  std::vector<Permutation> perms;
  std::vector<Permutation> inverses;

  static SymmetryContext build(const Graph& g, const SolveOptions& opts) {
    SymmetryContext sym;
    bool enabled = opts.automorphisms == AutReduction::On ||
                   (opts.automorphisms == AutReduction::Auto && g.order() <= 16);
    if (!enabled || g.order() == 0) return sym;
    std::vector<Permutation> group = automorphism_group_capped(g, opts.max_group_size);
    for (Permutation& p : group) {
      bool identity = true;
      for (int v = 0; v < g.order(); ++v)
        if (p[v] != v) {
          identity = false;
          break;
        }
      if (identity) continue;
      Permutation inv(p.size());
      for (size_t v = 0; v < p.size(); ++v) inv[p[v]] = static_cast<int>(v);
      sym.perms.push_back(std::move(p));
      sym.inverses.push_back(std::move(inv));
    }
    return sym;
  }
};

// Key for one relabeling: c'(v) = colors[perm[v]] (identity when perm is
// null); a selected vertex travels along via the inverse map.
inline ClassKey relabeled_key(const std::vector<std::uint8_t>& colors, int n,
                              const Permutation* perm, const Permutation* inverse,
                              int selected) {
  ClassKey key;
  std::array<std::uint8_t, kMaxOrder + 1> remap{};
  std::uint8_t next_id = 1;
  for (int v = 0; v < n; ++v) {
    std::uint8_t c = colors[perm ? (*perm)[v] : v];
    std::uint8_t id = 0;
    if (c != 0) {
      if (remap[c] == 0) remap[c] = next_id++;
      id = remap[c];
    }
    key.words[v >> 3] |= std::uint64_t(id) << ((v & 7) * 8);
  }
  if (selected >= 0)
    key.aux = static_cast<std::uint8_t>(inverse ? (*inverse)[selected] : selected);
  else
    key.aux = 0xFF;
  return key;
}

// Minimum key over the identity and every symmetry in sym.
inline ClassKey canonical_class_key(const std::vector<std::uint8_t>& colors, int n,
                                    int selected, const SymmetryContext& sym) {
  ClassKey best = relabeled_key(colors, n, nullptr, nullptr, selected);
  for (size_t i = 0; i < sym.perms.size(); ++i) {
    ClassKey candidate = relabeled_key(colors, n, &sym.perms[i], &sym.inverses[i], selected);
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace gamecrit::detail
