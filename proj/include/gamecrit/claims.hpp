#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gamecrit/criticality.hpp"
#include "gamecrit/graph.hpp"
#include "gamecrit/solver_common.hpp"

namespace gamecrit {

enum class ClaimStatus { Pass, Fail, Undecided };

const char* claim_status_name(ClaimStatus status);

struct EvidenceItem {
  std::string graph;   // DSL expression or graph6 record
  std::string detail;  // computed values, census ranges, counterexamples
};

struct ClaimReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Undecided;
  std::string summary;
  std::vector<EvidenceItem> evidence;  // sorted for run-to-run stability
  double wall_seconds = 0.0;
  std::uint64_t states_expanded = 0;
  std::uint64_t memo_hits = 0;
};

// Append-only value store keyed by (canonical graph6, invariant). Lines
// that fail to parse are skipped on load; duplicate appends of the same
// value are harmless. An empty path keeps the cache in memory only.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  std::optional<int> lookup(const std::string& canonical, InvariantId inv) const;
  void store(const std::string& canonical, InvariantId inv, int value);
  std::size_t size() const;

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, int> entries_;
};

// Exact invariant value, answered from the cache when possible. Only
// exact values are ever cached (never capped search results).
int cached_value(const Graph& g, InvariantId inv, ResultCache* cache,
                 const SolveOptions& opts = {}, SolveStats* stats = nullptr);

struct ClaimParams {
  std::optional<int> census_order;      // override for census-driven claims
  std::optional<int> family_n;          // override for family-driven claims
  std::optional<std::uint64_t> budget;  // solver state budget per solve
  bool allow_stretch = false;           // required (with budget) for stretch claims
  ResultCache* cache = nullptr;
};

struct ClaimSpec {
  std::string id;
  std::string description;
  bool stretch = false;
  int default_census_order = 0;  // 0 when the claim is not census-driven
  int quick_census_order = 0;    // census order used by the quick profile
  int default_family_n = 0;      // 0 when the claim is not family-driven
  bool in_quick = false;
};

const std::vector<ClaimSpec>& claim_registry();

// Deterministic report; Undecided only on explicit budget exhaustion.
// Unknown ids and ungated stretch runs throw std::invalid_argument.
ClaimReport run_claim(const std::string& claim_id, const ClaimParams& params = {});

enum class RunProfile { Quick, Full };

std::vector<ClaimReport> run_all(RunProfile profile, const ClaimParams& params = {});

std::string reports_to_json(const std::vector<ClaimReport>& reports);

// One row per graph: graph6, order, size, then one column per invariant.
std::string census_to_csv(const std::vector<Graph>& graphs,
                          const std::vector<InvariantId>& invariants,
                          ResultCache* cache = nullptr, const SolveOptions& opts = {});

}  // namespace gamecrit
