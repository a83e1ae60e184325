#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "gamecrit/coloring_game.hpp"
#include "gamecrit/criticality.hpp"
#include "gamecrit/enumeration.hpp"
#include "gamecrit/independence_game.hpp"
#include "gamecrit/indicated_game.hpp"
#include "gamecrit/reference/naive.hpp"

namespace {

using namespace gamecrit;
using namespace gamecrit::reference;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The census scan is the library's parallel kernel shape: independent
// solves over a list of graphs, dynamically scheduled.
std::vector<int> census_scan(const std::vector<Graph>& graphs, InvariantId inv, bool parallel) {
  std::vector<int> values(graphs.size(), 0);
#ifdef _OPENMP
  const int threads = parallel ? omp_get_max_threads() : 1;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#else
  (void)parallel;
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(graphs.size()); ++i) {
    values[static_cast<std::size_t>(i)] =
        invariant_value(graphs[static_cast<std::size_t>(i)], inv);
  }
  return values;
}

int naive_value(const Graph& g, InvariantId inv) {
  switch (inv) {
    case InvariantId::ChiG:
      return naive_chi_g(g);
    case InvariantId::ChiI:
      return naive_chi_i(g);
    case InvariantId::ChiIgA:
      return naive_game_value(g, IndepVariant::A);
    case InvariantId::ChiIgAB:
      return naive_game_value(g, IndepVariant::AB);
  }
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"timing comparisons: parallel vs serial census, memoized vs reference solvers"};
  int census_order = 6;
  int reference_order = 5;
  app.add_option("--census-order", census_order, "order for the kernel comparison, 1..7")
      ->check(CLI::Range(1, 7));
  app.add_option("--reference-order", reference_order,
                 "order for the solver comparison, 1..6")
      ->check(CLI::Range(1, 6));
  CLI11_PARSE(app, argc, argv);

  std::cout << std::fixed << std::setprecision(3);

  const std::vector<Graph> kernel_suite = enumerate_graphs(census_order, true);
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif
  std::cout << "census kernel: chi_g over " << kernel_suite.size()
            << " connected graphs of order " << census_order << '\n';
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<int> serial = census_scan(kernel_suite, InvariantId::ChiG, false);
  const double serial_time = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const std::vector<int> parallel = census_scan(kernel_suite, InvariantId::ChiG, true);
  const double parallel_time = seconds_since(t0);
  const bool kernel_match = serial == parallel;
  std::cout << "  serial            " << serial_time << " s\n";
  std::cout << "  parallel (" << max_threads << " thread" << (max_threads == 1 ? "" : "s")
            << ")  " << parallel_time << " s,  speedup "
            << (parallel_time > 0 ? serial_time / parallel_time : 0.0) << "x,  results "
            << (kernel_match ? "identical" : "DIFFER") << '\n';

  std::vector<Graph> reference_suite;
  for (int n = 1; n <= reference_order; ++n) {
    const std::vector<Graph> part = enumerate_graphs(n, true);
    reference_suite.insert(reference_suite.end(), part.begin(), part.end());
  }
  std::cout << "\nsolver vs reference: " << reference_suite.size()
            << " connected graphs of order 1.." << reference_order << '\n';

  bool all_match = kernel_match;
  for (const InvariantId inv :
       {InvariantId::ChiG, InvariantId::ChiI, InvariantId::ChiIgA, InvariantId::ChiIgAB}) {
    t0 = std::chrono::steady_clock::now();
    std::vector<int> fast(reference_suite.size());
    for (std::size_t i = 0; i < reference_suite.size(); ++i) {
      fast[i] = invariant_value(reference_suite[i], inv);
    }
    const double fast_time = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < reference_suite.size(); ++i) {
      if (naive_value(reference_suite[i], inv) != fast[i]) ++mismatches;
    }
    const double naive_time = seconds_since(t0);
    all_match = all_match && mismatches == 0;
    std::cout << "  " << std::left << std::setw(10) << invariant_name(inv) << std::right
              << "reference " << naive_time << " s,  memoized " << fast_time << " s,  speedup "
              << (fast_time > 0 ? naive_time / fast_time : 0.0) << "x,  mismatches "
              << mismatches << '\n';
  }

  if (!all_match) {
    std::cerr << "MISMATCH between implementations\n";
    return 1;
  }
  return 0;
}
