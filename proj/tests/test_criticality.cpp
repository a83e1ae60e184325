#include "doctest.h"
#include "gamecrit/criticality.hpp"
#include "gamecrit/graph.hpp"

#include <stdexcept>
#include <string>

using namespace gamecrit;

TEST_CASE("invariant names round trip") {
  for (const InvariantId inv :
       {InvariantId::ChiG, InvariantId::ChiI, InvariantId::ChiIgA, InvariantId::ChiIgAB}) {
    CHECK(invariant_from_name(invariant_name(inv)) == inv);
  }
  CHECK(std::string(invariant_name(InvariantId::ChiG)) == "chi_g");
  CHECK(std::string(invariant_name(InvariantId::ChiIgAB)) == "chi_ig_ab");
  CHECK(!invariant_from_name("chi"));
  CHECK(!invariant_from_name(""));
}

TEST_CASE("invariant_value dispatches") {
  const Graph g = cycle(5);
  CHECK(invariant_value(g, InvariantId::ChiG) == 3);
  CHECK(invariant_value(g, InvariantId::ChiI) == 3);
  CHECK(invariant_value(g, InvariantId::ChiIgA) == 3);
  CHECK(invariant_value(g, InvariantId::ChiIgAB) == 3);
}

TEST_CASE("capped values saturate at cap + 1") {
  CHECK(invariant_value_capped(cycle(5), InvariantId::ChiG, 2) == 3);
  CHECK(invariant_value_capped(cycle(5), InvariantId::ChiG, 3) == 3);
  CHECK(invariant_value_capped(cycle(5), InvariantId::ChiG, 10) == 3);
  CHECK(invariant_value_capped(path(4), InvariantId::ChiI, 1) == 2);
  CHECK(invariant_value_capped(complete(4), InvariantId::ChiIgA, 2) == 3);
  CHECK(invariant_value_capped(complete(4), InvariantId::ChiIgA, 5) == 4);
  CHECK(invariant_value_capped(Graph(0), InvariantId::ChiG, 3) == 0);
  CHECK_THROWS_AS(invariant_value_capped(path(2), InvariantId::ChiG, -1),
                  std::invalid_argument);
}

TEST_CASE("K2 is lower-critical for the coloring game") {
  const CriticalityProfile profile = delta_profile(complete(2), InvariantId::ChiG);
  CHECK(profile.base_value == 2);
  REQUIRE(profile.deltas.size() == 2);
  for (const VertexDelta& d : profile.deltas) {
    CHECK(d.value == 1);
    CHECK(d.delta == 1);
  }
  CHECK(profile.classification == CritClass::LowerCritical);
}

TEST_CASE("C4 is lower-critical, P5 is not critical") {
  const CriticalityProfile c4 = delta_profile(cycle(4), InvariantId::ChiG);
  CHECK(c4.base_value == 3);
  CHECK(c4.classification == CritClass::LowerCritical);
  for (const VertexDelta& d : c4.deltas) CHECK(d.value == 2);

  // Deleting an end of P5 leaves P4 with the same value.
  const CriticalityProfile p5 = delta_profile(path(5), InvariantId::ChiG);
  CHECK(p5.base_value == 3);
  CHECK(p5.classification == CritClass::NotCritical);
  CHECK(p5.deltas[0].value == 3);
  CHECK(p5.deltas[0].delta == 0);
}

TEST_CASE("order <= 1 never classifies as critical") {
  const CriticalityProfile k1 = delta_profile(empty_graph(1), InvariantId::ChiI);
  CHECK(k1.base_value == 1);
  REQUIRE(k1.deltas.size() == 1);
  CHECK(k1.deltas[0].value == 0);  // the empty graph
  CHECK(k1.classification == CritClass::NotCritical);
  CHECK(delta_profile(Graph(0), InvariantId::ChiG).deltas.empty());
}

TEST_CASE("is_k_critical on knowns") {
  CHECK(is_k_critical(cycle(3), InvariantId::ChiG, 3, CritFlavor::Lower));
  CHECK(is_k_critical(cycle(4), InvariantId::ChiG, 3, CritFlavor::Lower));
  CHECK(is_k_critical(path(4), InvariantId::ChiG, 3, CritFlavor::Lower));
  CHECK(!is_k_critical(cycle(5), InvariantId::ChiG, 3, CritFlavor::Lower));
  CHECK(!is_k_critical(path(4), InvariantId::ChiG, 2, CritFlavor::Any));

  CHECK(is_k_critical(complete(2), InvariantId::ChiI, 2, CritFlavor::Lower));
  CHECK(is_k_critical(cycle(5), InvariantId::ChiI, 3, CritFlavor::Lower));
  CHECK(!is_k_critical(cycle(4), InvariantId::ChiI, 2, CritFlavor::Any));

  CHECK(is_k_critical(cycle(3), InvariantId::ChiIgA, 3, CritFlavor::Lower));
  CHECK(is_k_critical(complete(2), InvariantId::ChiIgAB, 2, CritFlavor::Lower));

  // Lower-criticality is a special case of Any.
  CHECK(is_k_critical(cycle(4), InvariantId::ChiG, 3, CritFlavor::Any));
  CHECK(!is_k_critical(cycle(4), InvariantId::ChiG, 3, CritFlavor::Upper));
  CHECK(!is_k_critical(cycle(4), InvariantId::ChiG, 3, CritFlavor::Mixed));

  CHECK(!is_k_critical(empty_graph(1), InvariantId::ChiG, 1, CritFlavor::Any));
  CHECK_THROWS_AS(is_k_critical(path(2), InvariantId::ChiG, 0, CritFlavor::Any),
                  std::invalid_argument);
}

TEST_CASE("crit class names") {
  CHECK(std::string(crit_class_name(CritClass::LowerCritical)) == "lower-critical");
  CHECK(std::string(crit_class_name(CritClass::NotCritical)) == "not-critical");
}
