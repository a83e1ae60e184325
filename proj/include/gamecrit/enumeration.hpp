#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gamecrit/graph.hpp"

namespace gamecrit {

// One graph per isomorphism class, each in canonical labeling, ordered
// by canonical graph6 form. Exhausts all 2^(n(n-1)/2) edge subsets, so
// order is limited to 7.
std::vector<Graph> enumerate_graphs(int order, bool connected_only);

// One-vertex extensions of a complete order-n census: every class of
// order n+1 appears exactly once (again canonical, again sorted). The
// input must hold one representative per class, all of the same order.
std::vector<Graph> extend_census(const std::vector<Graph>& graphs, bool connected_only);

struct StreamDiagnostic {
  std::size_t line_number = 0;  // 1-based
  std::string message;
};

// Newline-delimited graph6, tolerant of blank lines and an optional
// ">>graph6<<" header. Bad records are skipped and reported through
// diagnostics rather than aborting the stream.
std::vector<Graph> read_graph6_stream(std::istream& in,
                                      std::vector<StreamDiagnostic>* diagnostics = nullptr);

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace gamecrit
