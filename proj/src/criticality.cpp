#include "gamecrit/criticality.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "gamecrit/coloring_game.hpp"
#include "gamecrit/indicated_game.hpp"
#include "gamecrit/independence_game.hpp"

namespace gamecrit {

namespace {

CritClass classify(int order, const std::vector<VertexDelta>& deltas) {
  if (order <= 1) return CritClass::NotCritical;
  bool lowered = false;
  bool raised = false;
  for (const VertexDelta& d : deltas) {
    if (d.delta == 0) return CritClass::NotCritical;
    (d.delta > 0 ? lowered : raised) = true;
  }
  if (lowered && raised) return CritClass::MixedCritical;
  return lowered ? CritClass::LowerCritical : CritClass::UpperCritical;
}

void absorb_locked(SolveStats* stats, const SolveStats& local) {
  if (stats == nullptr) return;
#ifdef _OPENMP
#pragma omp critical(gamecrit_stats)
#endif
  stats->absorb(local);
}

}  // namespace

const char* invariant_name(InvariantId inv) {
  switch (inv) {
    case InvariantId::ChiG:
      return "chi_g";
    case InvariantId::ChiI:
      return "chi_i";
    case InvariantId::ChiIgA:
      return "chi_ig_a";
    case InvariantId::ChiIgAB:
      return "chi_ig_ab";
  }
  return "unknown";
}

std::optional<InvariantId> invariant_from_name(std::string_view name) {
  if (name == "chi_g") return InvariantId::ChiG;
  if (name == "chi_i") return InvariantId::ChiI;
  if (name == "chi_ig_a") return InvariantId::ChiIgA;
  if (name == "chi_ig_ab") return InvariantId::ChiIgAB;
  return {};
}

const char* crit_class_name(CritClass c) {
  switch (c) {
    case CritClass::LowerCritical:
      return "lower-critical";
    case CritClass::UpperCritical:
      return "upper-critical";
    case CritClass::MixedCritical:
      return "mixed-critical";
    case CritClass::NotCritical:
      return "not-critical";
  }
  return "unknown";
}

int invariant_value(const Graph& g, InvariantId inv, const SolveOptions& opts,
                    SolveStats* stats) {
  switch (inv) {
    case InvariantId::ChiG:
      return chi_g(g, opts, stats);
    case InvariantId::ChiI:
      return chi_i(g, opts, stats);
    case InvariantId::ChiIgA:
      return chi_ig_a(g, opts, stats);
    case InvariantId::ChiIgAB:
      return chi_ig_ab(g, opts, stats);
  }
  throw std::invalid_argument("unknown invariant");
}

int invariant_value_capped(const Graph& g, InvariantId inv, int cap, const SolveOptions& opts,
                           SolveStats* stats) {
  if (cap < 0) throw std::invalid_argument("cap must be non-negative");
  if (g.order() == 0) return 0;
  switch (inv) {
    case InvariantId::ChiG:
    case InvariantId::ChiI: {
      // A finished game coloring is proper, so no k below chi(G) is
      // winnable, and k = maxdeg + 1 always is.
      const int lo = chromatic_number(g);
      if (lo > cap) return cap + 1;
      const int hi = std::min(cap, g.max_degree() + 1);
      for (int k = lo; k <= hi; ++k) {
        const bool win = inv == InvariantId::ChiG ? alice_wins(g, k, {}, opts, stats)
                                                  : ann_wins(g, k, opts, stats);
        if (win) return k;
      }
      return cap + 1;
    }
    case InvariantId::ChiIgA:
      return std::min(game_value(g, IndepVariant::A, {}, opts, stats), cap + 1);
    case InvariantId::ChiIgAB:
      return std::min(game_value(g, IndepVariant::AB, {}, opts, stats), cap + 1);
  }
  throw std::invalid_argument("unknown invariant");
}

CriticalityProfile delta_profile(const Graph& g, InvariantId inv, const SolveOptions& opts,
                                 SolveStats* stats) {
  CriticalityProfile profile;
  profile.base_value = invariant_value(g, inv, opts, stats);
  const int n = g.order();
  profile.deltas.resize(static_cast<std::size_t>(n));
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int v = 0; v < n; ++v) {
    try {
      SolveStats local;
      const int value = invariant_value(delete_vertex(g, v), inv, opts, &local);
      profile.deltas[static_cast<std::size_t>(v)] = {v, value, profile.base_value - value};
      absorb_locked(stats, local);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(gamecrit_failure)
#endif
      if (failure == nullptr) failure = std::current_exception();
    }
  }
  if (failure != nullptr) std::rethrow_exception(failure);
  profile.classification = classify(n, profile.deltas);
  return profile;
}

bool is_k_critical(const Graph& g, InvariantId inv, int k, CritFlavor flavor,
                   const SolveOptions& opts, SolveStats* stats) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.order() <= 1) return false;
  if (invariant_value_capped(g, inv, k, opts, stats) != k) return false;

  bool lowered = false;
  bool raised = false;
  for (int v = 0; v < g.order(); ++v) {
    const Graph h = delete_vertex(g, v);
    switch (flavor) {
      case CritFlavor::Lower:
        if (invariant_value_capped(h, inv, k - 1, opts, stats) >= k) return false;
        break;
      case CritFlavor::Upper:
        if (invariant_value_capped(h, inv, k, opts, stats) <= k) return false;
        break;
      case CritFlavor::Mixed:
      case CritFlavor::Any: {
        const int value = invariant_value_capped(h, inv, k, opts, stats);
        if (value == k) return false;
        (value < k ? lowered : raised) = true;
        break;
      }
    }
  }
  if (flavor == CritFlavor::Mixed) return lowered && raised;
  return true;
}

}  // namespace gamecrit
