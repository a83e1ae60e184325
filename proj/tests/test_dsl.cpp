#include "doctest.h"
#include "gamecrit/canonical.hpp"
#include "gamecrit/dsl.hpp"
#include "gamecrit/graph.hpp"
#include "gamecrit/graph6.hpp"

#include <stdexcept>

using namespace gamecrit;

TEST_CASE("base forms") {
  CHECK(parse_graph_spec("P4") == path(4));
  CHECK(parse_graph_spec("C5") == cycle(5));
  CHECK(parse_graph_spec("K6") == complete(6));
  CHECK(parse_graph_spec("K2,3") == complete_bipartite(2, 3));
  CHECK(parse_graph_spec("K1,4") == star(4));
  CHECK(parse_graph_spec("KmM4") == complete_bipartite_minus_matching(4));
  CHECK(parse_graph_spec("C4plus") == c4_plus());
  CHECK(parse_graph_spec("fig1") == fig1_graph());
}

TEST_CASE("operators") {
  CHECK(parse_graph_spec("cone(C4)") == cone(cycle(4)));
  CHECK(parse_graph_spec("union(C3,P2)") == disjoint_union(cycle(3), path(2)));
  CHECK(parse_graph_spec("glue(cone(KmM4),cone(KmM6))") ==
        identify_universal_pair(cone(complete_bipartite_minus_matching(4)),
                                cone(complete_bipartite_minus_matching(6))));
  CHECK(parse_graph_spec("cone(union(P2,P2))") ==
        cone(disjoint_union(path(2), path(2))));
}

TEST_CASE("whitespace and nesting") {
  CHECK(parse_graph_spec(" union( C6 , P6 ) ") == disjoint_union(cycle(6), path(6)));
  CHECK(parse_graph_spec("union(union(P1,P1),K3)").order() == 5);
  // K<m>,<n> inside an argument list stays unambiguous.
  CHECK(parse_graph_spec("union(K1,2,P2)") == disjoint_union(complete_bipartite(1, 2), path(2)));
  CHECK(parse_graph_spec("union(K1,K2)") == disjoint_union(complete(1), complete(2)));
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parse_graph_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("P0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("C2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("Q5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("cone(P2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("union(P2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("P4 junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("glue(P4,P4)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("p4"), std::invalid_argument);  // case sensitive
}

TEST_CASE("argument fallback to graph6") {
  CHECK(parse_graph_argument("C5") == cycle(5));  // DSL wins
  CHECK(parse_graph_argument(emit_graph6(fig1_graph())) == fig1_graph());
  // 'Ch' is valid graph6 (P4) and not a DSL name.
  CHECK(canonical_form(parse_graph_argument("Ch")) == canonical_form(path(4)));
  CHECK_THROWS_AS(parse_graph_argument("!!"), std::invalid_argument);
}
