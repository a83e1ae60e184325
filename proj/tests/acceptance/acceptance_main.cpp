// Acceptance gate: every numbered criterion below is an exact-integer
// check of the suite's headline results. Run one with --criterion N (the
// registered ctest entries do) or all in sequence with no arguments.
// Output is one [PASS]/[FAIL] line per criterion; exit 0 only if every
// criterion that ran passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamecrit/canonical.hpp"
#include "gamecrit/claims.hpp"
#include "gamecrit/coloring_game.hpp"
#include "gamecrit/criticality.hpp"
#include "gamecrit/enumeration.hpp"
#include "gamecrit/graph.hpp"
#include "gamecrit/graph6.hpp"
#include "gamecrit/independence_game.hpp"
#include "gamecrit/indicated_game.hpp"
#include "gamecrit/reference/naive.hpp"

namespace {

using namespace gamecrit;
using gamecrit::reference::naive_alice_wins;
using gamecrit::reference::naive_ann_wins;
using gamecrit::reference::naive_game_value;

struct Checker {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    ok = false;
    failures.push_back(what);
  }

  void expect_eq(int got, int want, const std::string& what) {
    ++checks;
    if (got == want) return;
    ok = false;
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    failures.push_back(s.str());
  }
};

std::vector<Graph> census_upto(int max_order, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_order; ++n) {
    for (const Graph& g : enumerate_graphs(n, connected_only)) out.push_back(g);
  }
  return out;
}

std::string join_set(const std::set<std::string>& items) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

void expect_set(Checker& c, const std::set<std::string>& found,
                const std::set<std::string>& expected, const std::string& what) {
  ++c.checks;
  if (found == expected) return;
  c.ok = false;
  c.failures.push_back(what + ": found {" + join_set(found) + "}, expected {" +
                       join_set(expected) + "}");
}

// ---- criteria ----

void criterion_1(Checker& c) {
  c.expect_eq(chi_g(complete(2)), 2, "chi_g(K2)");
  c.expect_eq(chi_g(path(4)), 3, "chi_g(P4)");
  c.expect_eq(chi_g(cycle(3)), 3, "chi_g(C3)");
  c.expect_eq(chi_g(cycle(4)), 3, "chi_g(C4)");
  for (int n = 1; n <= 5; ++n) {
    c.expect_eq(chi_g(star(n)), 2, "chi_g(K1," + std::to_string(n) + ")");
  }
}

void criterion_2(Checker& c) {
  const Graph g = complete_bipartite_minus_matching(4);
  c.expect_eq(chi_g(g), 4, "chi_g(KmM4)");
  for (int v = 0; v < g.order(); ++v) {
    c.expect_eq(chi_g(delete_vertex(g, v)), 3,
                "chi_g(KmM4 minus v" + std::to_string(v) + ")");
  }
}

void criterion_3(Checker& c) {
  const Graph g = cone(complete_bipartite_minus_matching(4));
  const int apex = g.order() - 1;
  const CriticalityProfile profile = delta_profile(g, InvariantId::ChiG);
  c.expect_eq(profile.base_value, 3, "chi_g(cone(KmM4))");
  std::set<int> deltas;
  for (const VertexDelta& d : profile.deltas) {
    c.expect_eq(d.value, 4, "chi_g(cone(KmM4) minus v" + std::to_string(d.vertex) + ")");
    deltas.insert(d.delta);
  }
  c.expect(deltas == std::set<int>{-1}, "every deletion has delta -1");
  c.expect_eq(profile.deltas[static_cast<std::size_t>(apex)].value, 4,
              "deleting the universal vertex leaves chi_g 4");
  c.expect(profile.classification == CritClass::UpperCritical,
           "cone(KmM4) classifies as upper-critical");
}

void criterion_4(Checker& c) {
  const std::set<std::string> expected = {canonical_form(complete(2))};
  const std::vector<Graph> all = census_upto(6, false);
  const std::vector<Graph> connected = census_upto(6, true);
  struct Scan {
    InvariantId inv;
    bool connected_only;
  };
  for (const Scan scan : {Scan{InvariantId::ChiG, false}, Scan{InvariantId::ChiI, false},
                          Scan{InvariantId::ChiIgA, true}, Scan{InvariantId::ChiIgAB, true}}) {
    std::set<std::string> found;
    for (const Graph& g : scan.connected_only ? connected : all) {
      if (is_k_critical(g, scan.inv, 2, CritFlavor::Any)) found.insert(emit_graph6(g));
    }
    expect_set(c, found, expected,
               std::string("2-critical graphs of order <= 6 for ") + invariant_name(scan.inv));
  }
}

void criterion_5(Checker& c) {
  std::set<std::string> expected;
  for (const Graph& g : {path(4), cycle(3), cycle(4)}) expected.insert(canonical_form(g));
  std::set<std::string> found;
  for (const Graph& g : census_upto(7, true)) {
    if (is_k_critical(g, InvariantId::ChiG, 3, CritFlavor::Lower)) found.insert(emit_graph6(g));
  }
  expect_set(c, found, expected, "connected 3-chi_g-lower-critical graphs of order <= 7");
}

void criterion_6(Checker& c) {
  std::set<std::string> expected;
  for (const Graph& g : {cycle(3), cycle(5), cycle(7)}) expected.insert(canonical_form(g));
  std::set<std::string> found;
  for (const Graph& g : census_upto(7, false)) {
    if (is_k_critical(g, InvariantId::ChiI, 3, CritFlavor::Lower)) found.insert(emit_graph6(g));
  }
  expect_set(c, found, expected, "3-chi_i-lower-critical graphs of order <= 7");
}

void criterion_7(Checker& c) {
  const std::vector<Graph> parts = census_upto(5, true);
  std::vector<int> part_value(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) part_value[i] = chi_i(parts[i]);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      const int want = std::max(part_value[i], part_value[j]);
      const int got = chi_i(disjoint_union(parts[i], parts[j]));
      if (got != want) {
        c.expect_eq(got, want,
                    "chi_i(" + emit_graph6(parts[i]) + " union " + emit_graph6(parts[j]) + ")");
      } else {
        ++c.checks;
      }
    }
  }
}

void criterion_8(Checker& c) {
  c.expect_eq(chi_i(fig1_graph()), 3, "chi_i(fig1)");
  c.expect_eq(chi_i(delete_vertex(fig1_graph(), kFig1X)), 4, "chi_i(fig1 minus v8)");
}

void criterion_9(Checker& c) {
  const Graph g = disjoint_union(cycle(6), path(6));
  for (const IndepVariant variant : {IndepVariant::A, IndepVariant::AB}) {
    const char* name = variant == IndepVariant::A ? "chi_ig_a" : "chi_ig_ab";
    c.expect_eq(game_value(g, variant), 3, std::string(name) + "(union(C6,P6))");
    for (int v = 0; v < g.order(); ++v) {
      c.expect_eq(game_value(delete_vertex(g, v), variant), 2,
                  std::string(name) + "(union(C6,P6) minus v" + std::to_string(v) + ")");
    }
  }
}

void criterion_10(Checker& c) {
  const Graph m3 = complete_bipartite_minus_matching(3);
  const Graph m4 = complete_bipartite_minus_matching(4);
  c.expect_eq(game_value(m3, IndepVariant::A), 3, "chi_ig_a(KmM3)");
  c.expect_eq(game_value(m3, IndepVariant::AB), 3, "chi_ig_ab(KmM3)");
  c.expect_eq(game_value(m4, IndepVariant::A), 4, "chi_ig_a(KmM4)");
  for (const Graph* g : {&m3, &m4}) {
    const std::string label = g == &m3 ? "KmM3" : "KmM4";
    for (int v = 0; v < g->order(); ++v) {
      const Graph h = delete_vertex(*g, v);
      c.expect_eq(game_value(h, IndepVariant::A), 2,
                  "chi_ig_a(" + label + " minus v" + std::to_string(v) + ")");
      c.expect_eq(game_value(h, IndepVariant::AB), 2,
                  "chi_ig_ab(" + label + " minus v" + std::to_string(v) + ")");
    }
  }
}

void criterion_11(Checker& c) {
  for (const Graph& g : census_upto(7, true)) {
    if (g.size() < 1) continue;
    const bool a2 = game_value(g, IndepVariant::A) == 2;
    const bool b2 = game_value(g, IndepVariant::AB) == 2;
    const bool dom = has_bipartite_dominating_vertex(g);
    if (a2 == b2 && b2 == dom) {
      ++c.checks;
    } else {
      std::ostringstream s;
      s << emit_graph6(g) << ": chi_ig_a==2 " << (a2 ? "yes" : "no") << ", chi_ig_ab==2 "
        << (b2 ? "yes" : "no") << ", bipartite dominating vertex " << (dom ? "yes" : "no");
      c.expect(false, s.str());
    }
  }
}

void criterion_12(Checker& c) {
  // Orders 1..7 in process; order 8 must round-trip through a graph6 file.
  const std::vector<Graph> seven = enumerate_graphs(7, true);
  const std::vector<Graph> eight = extend_census(seven, true);
  c.expect_eq(static_cast<int>(eight.size()), 11117, "connected census size at order 8");
  const auto file =
      std::filesystem::temp_directory_path() / "gamecrit_acceptance_order8.g6";
  {
    std::ofstream out(file);
    write_graph6_stream(out, eight);
  }
  std::vector<Graph> eight_in;
  {
    std::ifstream in(file);
    std::vector<StreamDiagnostic> diagnostics;
    eight_in = read_graph6_stream(in, &diagnostics);
    c.expect(diagnostics.empty(), "the graph6 stream reads back without diagnostics");
  }
  std::filesystem::remove(file);
  c.expect(eight_in == eight, "the graph6 stream reads back unchanged");

  std::vector<Graph> graphs = census_upto(7, true);
  graphs.insert(graphs.end(), eight_in.begin(), eight_in.end());
  std::set<std::string> expected;
  for (const Graph& g :
       {cycle(3), cycle(5), path(6), complete_bipartite_minus_matching(3), c4_plus()}) {
    expected.insert(canonical_form(g));
  }
  for (const InvariantId inv : {InvariantId::ChiIgA, InvariantId::ChiIgAB}) {
    std::set<std::string> found;
    for (const Graph& g : graphs) {
      if (is_k_critical(g, inv, 3, CritFlavor::Lower)) found.insert(emit_graph6(g));
    }
    expect_set(c, found, expected,
               std::string("connected 3-lower-critical graphs of order <= 8 for ") +
                   invariant_name(inv));
  }
}

void criterion_13(Checker& c) {
  for (const Graph& g : census_upto(7, true)) {
    for (int u = 0; u < g.order(); ++u) {
      bool far = false;
      for (int w = 0; w < g.order() && !far; ++w) {
        const int d = distance(g, u, w);
        far = d != kUnreachable && d >= 3;
      }
      if (!far) continue;
      for (const IndepVariant variant : {IndepVariant::A, IndepVariant::AB}) {
        const int value = game_value(g, variant, u);
        if (value >= 3) {
          ++c.checks;
        } else {
          std::ostringstream s;
          s << emit_graph6(g) << ": opening v" << u << " finished in " << value
            << " rounds despite a vertex at distance >= 3";
          c.expect(false, s.str());
        }
      }
    }
  }
}

void criterion_14(Checker& c) {
  for (const Graph& g : census_upto(6, false)) {
    const std::string form = emit_graph6(g);
    for (int k = 1; k <= 4; ++k) {
      c.expect(alice_wins(g, k) == naive_alice_wins(g, k),
               "alice_wins(" + form + ", " + std::to_string(k) + ") disagrees with the reference");
      c.expect(ann_wins(g, k) == naive_ann_wins(g, k),
               "ann_wins(" + form + ", " + std::to_string(k) + ") disagrees with the reference");
    }
    c.expect_eq(chi_ig_a(g), naive_game_value(g, IndepVariant::A), "chi_ig_a(" + form + ")");
    c.expect_eq(chi_ig_ab(g), naive_game_value(g, IndepVariant::AB), "chi_ig_ab(" + form + ")");
  }
}

void criterion_15(Checker& c) {
  // The 21- and 35-vertex stretch constructions and the rest of their
  // families are declared not reproducible at desk scale: their exact
  // values stay behind --allow-stretch with an explicit budget. What is
  // verified here is the constructions themselves and that gate.
  const Graph m5 = complete_bipartite_minus_matching(5);
  c.expect_eq(m5.order(), 10, "KmM5 order");
  c.expect_eq(m5.size(), 20, "KmM5 size");
  for (int i = 0; i < 5; ++i) {
    c.expect(!m5.has_edge(i, 5 + i), "KmM5 drops matching edge " + std::to_string(i));
    c.expect_eq(m5.degree(i), 4, "KmM5 degree of v" + std::to_string(i));
  }

  const Graph glued = identify_universal_pair(cone(complete_bipartite_minus_matching(4)),
                                              cone(complete_bipartite_minus_matching(6)));
  c.expect_eq(glued.order(), 21, "glued cone order");
  c.expect_eq(glued.degree(glued.order() - 1), 20, "the glued apex is universal");
  int deg4 = 0;
  int deg6 = 0;
  for (int v = 0; v + 1 < glued.order(); ++v) {
    deg4 += glued.degree(v) == 4;
    deg6 += glued.degree(v) == 6;
  }
  c.expect_eq(deg4, 8, "glued cone vertices of degree 4");
  c.expect_eq(deg6, 12, "glued cone vertices of degree 6");

  const TriApexGraph t = triple_cone_triangle(2);
  c.expect_eq(t.graph.order(), 35, "triple cone order");
  c.expect(t.graph.has_edge(t.apex_u, t.apex_v) && t.graph.has_edge(t.apex_v, t.apex_w) &&
               t.graph.has_edge(t.apex_u, t.apex_w),
           "the three apexes form a triangle");
  c.expect_eq(t.graph.degree(t.apex_u), 10, "degree of the small apex");
  c.expect_eq(t.graph.degree(t.apex_v), 14, "degree of the first large apex");
  c.expect_eq(t.graph.degree(t.apex_w), 14, "degree of the second large apex");
  int deg_counts[3] = {0, 0, 0};  // degree 4, degree 6, apexes
  for (int v = 0; v < t.graph.order(); ++v) {
    const int d = t.graph.degree(v);
    if (d == 4) ++deg_counts[0];
    if (d == 6) ++deg_counts[1];
    if (v == t.apex_u || v == t.apex_v || v == t.apex_w) ++deg_counts[2];
  }
  c.expect_eq(deg_counts[0], 8, "triple cone vertices of degree 4");
  c.expect_eq(deg_counts[1], 24, "triple cone vertices of degree 6");
  c.expect_eq(deg_counts[2], 3, "triple cone apex count");

  bool threw_without_flag = false;
  try {
    run_claim("prop-5.3");
  } catch (const std::invalid_argument&) {
    threw_without_flag = true;
  }
  c.expect(threw_without_flag, "stretch claims refuse to run without --allow-stretch");
  bool threw_without_budget = false;
  try {
    ClaimParams params;
    params.allow_stretch = true;
    run_claim("prop-5.4", params);
  } catch (const std::invalid_argument&) {
    threw_without_budget = true;
  }
  c.expect(threw_without_budget, "stretch claims refuse to run without a budget");

  ClaimParams gated;
  gated.allow_stretch = true;
  gated.budget = 1000;
  const ClaimReport report = run_claim("prop-5.3", gated);
  c.expect(report.status == ClaimStatus::Undecided,
           "a 1000-state budget leaves the glued-cones stretch claim undecided");
}

struct Criterion {
  int num;
  const char* title;
  void (*run)(Checker&);
};

const Criterion kCriteria[] = {
    {1, "chi_g ground truth on K2, P4, C3, C4 and stars", criterion_1},
    {2, "KmM4 has chi_g 4 and every deletion drops it to 3", criterion_2},
    {3, "cone(KmM4) has chi_g 3 and every deletion raises it to 4", criterion_3},
    {4, "K2 is the unique 2-critical graph of order <= 6 for all four invariants", criterion_4},
    {5, "connected 3-chi_g-lower-critical graphs of order <= 7 are P4, C3, C4", criterion_5},
    {6, "3-chi_i-lower-critical graphs of order <= 7 are C3, C5, C7", criterion_6},
    {7, "chi_i of a union is the max over the parts for connected pairs of order <= 5",
     criterion_7},
    {8, "the 9-vertex example has chi_i 3, rising to 4 without the marked vertex", criterion_8},
    {9, "union(C6,P6) has value 3 and every deletion drops it to 2, both variants", criterion_9},
    {10, "KmM3 has value 3 both variants, KmM4 has A-value 4, every deletion drops to 2",
     criterion_10},
    {11, "value 2 coincides with a bipartite dominating vertex, connected order <= 7",
     criterion_11},
    {12, "connected 3-lower-critical graphs of order <= 8 via a graph6 file match both variants",
     criterion_12},
    {13, "openings with a vertex at distance >= 3 force a third round, connected order <= 7",
     criterion_13},
    {14, "optimized solvers match the memo-free reference on every graph of order <= 6",
     criterion_14},
    {15, "stretch constructions verified structurally; exact values declared not reproducible "
         "at desk scale",
     criterion_15},
};

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (selected && (*selected < 1 || *selected > 15)) {
    std::fprintf(stderr, "criterion number must be in 1..15\n");
    return 2;
  }

  bool all_ok = true;
  for (const Criterion& cr : kCriteria) {
    if (selected && cr.num != *selected) continue;
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.failures.push_back(std::string("unhandled exception: ") + e.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::printf("[%s] criterion %d: %s (%d checks, %.1f s)\n", c.ok ? "PASS" : "FAIL", cr.num,
                cr.title, c.checks, dt.count());
    const std::size_t shown = std::min<std::size_t>(c.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
      std::printf("       %s\n", c.failures[i].c_str());
    }
    if (c.failures.size() > shown) {
      std::printf("       ... and %zu more\n", c.failures.size() - shown);
    }
    std::fflush(stdout);
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
