#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamecrit/graph.hpp"
#include "gamecrit/solver_common.hpp"

namespace gamecrit {

enum class InvariantId { ChiG, ChiI, ChiIgA, ChiIgAB };

const char* invariant_name(InvariantId inv);
std::optional<InvariantId> invariant_from_name(std::string_view name);

// Flavor requested in a k-criticality query; Any accepts all three.
enum class CritFlavor { Lower, Upper, Mixed, Any };

enum class CritClass { LowerCritical, UpperCritical, MixedCritical, NotCritical };

const char* crit_class_name(CritClass c);

// delta = phi(G) - phi(G - vertex); positive when deletion lowers the
// invariant. value is phi(G - vertex) itself, with phi(empty) = 0.
struct VertexDelta {
  int vertex = 0;
  int value = 0;
  int delta = 0;
};

struct CriticalityProfile {
  int base_value = 0;
  std::vector<VertexDelta> deltas;  // ascending by vertex
  CritClass classification = CritClass::NotCritical;
};

int invariant_value(const Graph& g, InvariantId inv, const SolveOptions& opts = {},
                    SolveStats* stats = nullptr);

// min(phi(G), cap + 1): answers "is phi <= cap, and if so what is it"
// without searching past the cap.
int invariant_value_capped(const Graph& g, InvariantId inv, int cap,
                           const SolveOptions& opts = {}, SolveStats* stats = nullptr);

// Full per-vertex deletion profile. Graphs of order <= 1 classify as
// NotCritical regardless of their (trivial) deltas.
CriticalityProfile delta_profile(const Graph& g, InvariantId inv, const SolveOptions& opts = {},
                                 SolveStats* stats = nullptr);

// phi(G) == k and every deletion moves the value the way flavor demands.
// Uses capped subsearches so a single deletion can refute cheaply.
bool is_k_critical(const Graph& g, InvariantId inv, int k, CritFlavor flavor,
                   const SolveOptions& opts = {}, SolveStats* stats = nullptr);

}  // namespace gamecrit
