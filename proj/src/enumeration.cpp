#include "gamecrit/enumeration.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string_view>

#include "gamecrit/canonical.hpp"
#include "gamecrit/graph6.hpp"

namespace gamecrit {

namespace {

// Canonical forms double as the dedup key and the stored representative.
std::vector<Graph> materialize(const std::set<std::string>& forms) {
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const std::string& form : forms) out.push_back(parse_graph6(form));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int order, bool connected_only) {
  if (order < 1 || order > 7) throw std::invalid_argument("order must be in [1, 7]");
  const int pairs = order * (order - 1) / 2;
  const std::int64_t mask_count = std::int64_t{1} << pairs;
  std::set<std::string> forms;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::set<std::string> local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t mask = 0; mask < mask_count; ++mask) {
      Graph g = empty_graph(order);
      int index = 0;
      for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v, ++index) {
          if ((mask >> index) & 1) g.add_edge(u, v);
        }
      }
      if (connected_only && !is_connected(g)) continue;
      local.insert(canonical_form(g));
    }
#ifdef _OPENMP
#pragma omp critical(gamecrit_census_merge)
#endif
    forms.merge(local);
  }
  return materialize(forms);
}

std::vector<Graph> extend_census(const std::vector<Graph>& graphs, bool connected_only) {
  if (graphs.empty()) return {};
  const int n = graphs.front().order();
  for (const Graph& g : graphs) {
    if (g.order() != n) throw std::invalid_argument("census graphs must share one order");
  }
  if (n + 1 > kMaxOrder) throw std::invalid_argument("extended order exceeds the vertex limit");
  if (n >= 26) throw std::invalid_argument("extension neighborhood space too large");
  // Every class of order n+1 has a deletable vertex leaving a census
  // member (any vertex for the full census; a spanning-tree leaf keeps
  // connectivity for the connected one), so trying every neighborhood
  // on every parent reaches every class.
  const std::uint64_t mask_count = std::uint64_t{1} << n;
  std::set<std::string> forms;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::set<std::string> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(graphs.size()); ++i) {
      const Graph& parent = graphs[static_cast<std::size_t>(i)];
      for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
        Graph child = empty_graph(n + 1);
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (parent.has_edge(u, v)) child.add_edge(u, v);
          }
          if ((mask >> u) & 1) child.add_edge(u, n);
        }
        if (connected_only && !is_connected(child)) continue;
        local.insert(canonical_form(child));
      }
    }
#ifdef _OPENMP
#pragma omp critical(gamecrit_census_merge)
#endif
    forms.merge(local);
  }
  return materialize(forms);
}

std::vector<Graph> read_graph6_stream(std::istream& in,
                                      std::vector<StreamDiagnostic>* diagnostics) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = line;
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) {
      view.remove_prefix(1);
    }
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.back()))) {
      view.remove_suffix(1);
    }
    if (view.empty()) continue;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (view.substr(0, kHeader.size()) == kHeader) view.remove_prefix(kHeader.size());
    if (view.empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const std::exception& e) {
      if (diagnostics != nullptr) diagnostics->push_back({line_number, e.what()});
    }
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << emit_graph6(g) << '\n';
}

}  // namespace gamecrit
