#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gamecrit/canonical.hpp"
#include "gamecrit/claims.hpp"
#include "gamecrit/criticality.hpp"
#include "gamecrit/dsl.hpp"
#include "gamecrit/enumeration.hpp"
#include "gamecrit/graph6.hpp"
#include "json.hpp"

namespace {

using namespace gamecrit;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUndecided = 2;

struct CommonArgs {
  std::string graph_text;
  std::string invariant = "chi_g";
  std::string cache_path;
  std::uint64_t budget = 0;
  bool has_budget = false;
  bool json = false;
};

InvariantId parse_invariant(const std::string& name) {
  const auto inv = invariant_from_name(name);
  if (!inv) throw std::invalid_argument("unknown invariant: " + name);
  return *inv;
}

SolveOptions options_for(const CommonArgs& args) {
  SolveOptions opts;
  if (args.has_budget) opts.state_budget = args.budget;
  return opts;
}

int run_solve(const CommonArgs& args) {
  const Graph g = parse_graph_argument(args.graph_text);
  const InvariantId inv = parse_invariant(args.invariant);
  const SolveOptions opts = options_for(args);
  std::unique_ptr<ResultCache> cache;
  if (!args.cache_path.empty()) cache = std::make_unique<ResultCache>(args.cache_path);

  SolveStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  int value = 0;
  try {
    value = cached_value(g, inv, cache.get(), opts, &stats);
  } catch (const BudgetExceeded& e) {
    if (args.json) {
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["invariant"] = invariant_name(inv);
      doc["graph6"] = emit_graph6(g);
      doc["status"] = "undecided";
      doc["budget"] = e.budget();
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "undecided: " << e.what() << '\n';
    }
    return kExitUndecided;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (args.json) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["invariant"] = invariant_name(inv);
    doc["graph6"] = emit_graph6(g);
    doc["status"] = "ok";
    doc["value"] = value;
    doc["wall_seconds"] = seconds;
    doc["states_expanded"] = stats.states_expanded;
    doc["memo_hits"] = stats.memo_hits;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << invariant_name(inv) << '(' << args.graph_text << ") = " << value << '\n';
    std::cout << "states expanded " << stats.states_expanded << ", memo hits " << stats.memo_hits
              << ", " << seconds << " s\n";
  }
  return kExitOk;
}

int run_critical(const CommonArgs& args) {
  const Graph g = parse_graph_argument(args.graph_text);
  const InvariantId inv = parse_invariant(args.invariant);
  const SolveOptions opts = options_for(args);

  SolveStats stats;
  CriticalityProfile profile;
  try {
    profile = delta_profile(g, inv, opts, &stats);
  } catch (const BudgetExceeded& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  }

  if (args.json) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["invariant"] = invariant_name(inv);
    doc["graph6"] = emit_graph6(g);
    doc["base_value"] = profile.base_value;
    doc["classification"] = crit_class_name(profile.classification);
    nlohmann::json deltas = nlohmann::json::array();
    for (const VertexDelta& d : profile.deltas) {
      deltas.push_back({{"vertex", d.vertex}, {"value", d.value}, {"delta", d.delta}});
    }
    doc["deltas"] = std::move(deltas);
    doc["states_expanded"] = stats.states_expanded;
    doc["memo_hits"] = stats.memo_hits;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << invariant_name(inv) << '(' << args.graph_text << ") = " << profile.base_value
              << ", " << crit_class_name(profile.classification) << '\n';
    for (const VertexDelta& d : profile.deltas) {
      std::cout << "  minus v" << d.vertex << ": " << d.value << " (delta "
                << (d.delta >= 0 ? "+" : "") << d.delta << ")\n";
    }
  }
  return kExitOk;
}

int run_enumerate(int order, bool connected, const std::string& from_path, bool csv,
                  const std::vector<std::string>& invariant_names, const std::string& out_path,
                  const CommonArgs& args) {
  std::vector<Graph> graphs;
  if (!from_path.empty()) {
    std::ifstream in(from_path);
    if (!in) throw std::invalid_argument("cannot open " + from_path);
    std::vector<StreamDiagnostic> diagnostics;
    const std::vector<Graph> base = read_graph6_stream(in, &diagnostics);
    for (const StreamDiagnostic& d : diagnostics) {
      std::cerr << from_path << ':' << d.line_number << ": " << d.message << '\n';
    }
    if (base.empty()) throw std::invalid_argument(from_path + " holds no graphs");
    graphs = extend_census(base, connected);
  } else {
    if (order < 1 || order > 8) throw std::invalid_argument("--order must be in [1, 8]");
    if (order <= 7) {
      graphs = enumerate_graphs(order, connected);
    } else {
      graphs = extend_census(enumerate_graphs(7, connected), connected);
    }
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (csv) {
    std::vector<InvariantId> invariants;
    for (const std::string& name : invariant_names) invariants.push_back(parse_invariant(name));
    std::unique_ptr<ResultCache> cache;
    if (!args.cache_path.empty()) cache = std::make_unique<ResultCache>(args.cache_path);
    out << census_to_csv(graphs, invariants, cache.get(), options_for(args));
  } else {
    write_graph6_stream(out, graphs);
  }
  std::cerr << graphs.size() << " graphs\n";
  return kExitOk;
}

int run_verify(const std::vector<std::string>& claim_ids, const std::string& profile_name,
               bool list_only, bool allow_stretch, std::optional<int> census_order,
               std::optional<int> family_n, const CommonArgs& args) {
  if (list_only) {
    for (const ClaimSpec& spec : claim_registry()) {
      std::cout << spec.id << (spec.stretch ? "  [stretch]" : "")
                << (spec.in_quick ? "  [quick]" : "") << "\n    " << spec.description << '\n';
    }
    return kExitOk;
  }

  std::unique_ptr<ResultCache> cache;
  if (!args.cache_path.empty()) cache = std::make_unique<ResultCache>(args.cache_path);
  ClaimParams params;
  params.census_order = census_order;
  params.family_n = family_n;
  if (args.has_budget) params.budget = args.budget;
  params.allow_stretch = allow_stretch;
  params.cache = cache.get();
  if (allow_stretch && !params.budget) {
    throw std::invalid_argument("--allow-stretch requires --budget");
  }

  std::vector<ClaimReport> reports;
  if (!claim_ids.empty()) {
    for (const std::string& id : claim_ids) reports.push_back(run_claim(id, params));
  } else {
    const RunProfile profile =
        profile_name == "quick" ? RunProfile::Quick : RunProfile::Full;
    reports = run_all(profile, params);
  }

  bool any_fail = false;
  bool any_undecided = false;
  for (const ClaimReport& report : reports) {
    any_fail = any_fail || report.status == ClaimStatus::Fail;
    any_undecided = any_undecided || report.status == ClaimStatus::Undecided;
  }

  if (args.json) {
    std::cout << reports_to_json(reports);
  } else {
    for (const ClaimReport& report : reports) {
      const char* tag = report.status == ClaimStatus::Pass
                            ? "PASS"
                            : report.status == ClaimStatus::Fail ? "FAIL" : "UNDECIDED";
      std::cout << '[' << tag << "] " << report.claim_id << ": " << report.summary << " ("
                << report.wall_seconds << " s, " << report.states_expanded << " states)\n";
      for (const EvidenceItem& e : report.evidence) {
        std::cout << "    " << e.graph << ": " << e.detail << '\n';
      }
    }
  }
  if (any_fail) return kExitFailure;
  if (any_undecided) return kExitUndecided;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact game chromatic invariants and vertex criticality"};
  app.require_subcommand(1);
  const std::vector<std::string> invariant_names = {"chi_g", "chi_i", "chi_ig_a", "chi_ig_ab"};

  CommonArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "compute one invariant of one graph");
  solve->add_option("--graph", solve_args.graph_text, "graph expression or graph6")->required();
  solve->add_option("--invariant", solve_args.invariant, "invariant to compute")
      ->check(CLI::IsMember(invariant_names));
  solve->add_option("--budget", solve_args.budget, "solver state budget");
  solve->add_option("--cache", solve_args.cache_path, "result cache file");
  solve->add_flag("--json", solve_args.json, "machine readable output");

  CommonArgs crit_args;
  CLI::App* critical =
      app.add_subcommand("critical", "per-vertex deletion profile and classification");
  critical->add_option("--graph", crit_args.graph_text, "graph expression or graph6")->required();
  critical->add_option("--invariant", crit_args.invariant, "invariant to profile")
      ->check(CLI::IsMember(invariant_names));
  critical->add_option("--budget", crit_args.budget, "solver state budget");
  critical->add_flag("--json", crit_args.json, "machine readable output");

  CommonArgs enum_args;
  int enum_order = 0;
  bool enum_connected = false;
  bool enum_csv = false;
  std::string enum_from;
  std::string enum_out;
  std::vector<std::string> enum_invariants;
  CLI::App* enumerate = app.add_subcommand("enumerate", "census of small graphs, one per class");
  enumerate->add_option("--order", enum_order, "graph order, 1..8");
  enumerate->add_option("--from", enum_from,
                        "extend an existing census (newline-delimited graph6) by one vertex");
  enumerate->add_flag("--connected", enum_connected, "connected graphs only");
  enumerate->add_flag("--csv", enum_csv, "emit a csv table instead of graph6 lines");
  enumerate
      ->add_option("--invariant", enum_invariants, "csv value column, repeatable")
      ->check(CLI::IsMember(invariant_names));
  enumerate->add_option("--output", enum_out, "write to a file instead of stdout");
  enumerate->add_option("--cache", enum_args.cache_path, "result cache file");
  enumerate->add_option("--budget", enum_args.budget, "solver state budget");

  CommonArgs verify_args;
  std::vector<std::string> verify_claims;
  std::string verify_profile = "full";
  bool verify_list = false;
  bool verify_allow_stretch = false;
  int verify_census_order = 0;
  int verify_family_n = 0;
  CLI::App* verify = app.add_subcommand("verify", "run registered claims and report evidence");
  verify->add_option("--claim", verify_claims, "claim id, repeatable (default: whole profile)");
  verify->add_option("--profile", verify_profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  CLI::Option* census_opt =
      verify->add_option("--census-order", verify_census_order, "census order override, 1..8");
  CLI::Option* family_opt =
      verify->add_option("--family-n", verify_family_n, "family size override");
  verify->add_option("--budget", verify_args.budget, "solver state budget");
  verify->add_option("--cache", verify_args.cache_path, "result cache file");
  verify->add_flag("--allow-stretch", verify_allow_stretch,
                   "permit stretch claims; requires --budget");
  verify->add_flag("--json", verify_args.json, "machine readable output");
  verify->add_flag("--list", verify_list, "list registered claims and exit");

  CLI11_PARSE(app, argc, argv);

  solve_args.has_budget = solve->count("--budget") > 0;
  crit_args.has_budget = critical->count("--budget") > 0;
  enum_args.has_budget = enumerate->count("--budget") > 0;
  verify_args.has_budget = verify->count("--budget") > 0;

  try {
    if (*solve) return run_solve(solve_args);
    if (*critical) return run_critical(crit_args);
    if (*enumerate) {
      if (enumerate->count("--order") == 0 && enum_from.empty()) {
        throw std::invalid_argument("enumerate needs --order or --from");
      }
      return run_enumerate(enum_order, enum_connected, enum_from, enum_csv, enum_invariants,
                           enum_out, enum_args);
    }
    if (*verify) {
      return run_verify(verify_claims, verify_profile, verify_list, verify_allow_stretch,
                        census_opt->count() ? std::optional<int>(verify_census_order)
                                            : std::nullopt,
                        family_opt->count() ? std::optional<int>(verify_family_n) : std::nullopt,
                        verify_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
