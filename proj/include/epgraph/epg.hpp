#pragma once

#include <vector>

#include "epgraph/graph.hpp"
#include "epgraph/group.hpp"

namespace epg {

// Enhanced power graph of G: vertex i is element i, and x ~ y iff both lie
// in a common cyclic subgroup. Built as the clique union over the maximal
// cyclic subgroups, which is equivalent because every cyclic subgroup sits
// inside a maximal one. Connected with diameter <= 2 (the identity
// dominates).
Graph enhanced_power_graph(const FiniteGroup& g);
Graph enhanced_power_graph(const FiniteGroup& g, const std::vector<Subgroup>& maximals);

// Induced subgraph on the non-identity elements; result vertex j is group
// element j+1 and the labels record that map. Throws TrivialGroup for |G|=1.
Graph proper_enhanced_power_graph(const FiniteGroup& g);

// True iff some maximal cyclic subgroup contains both. Throws SameVertex
// when x == y.
bool are_adjacent(const FiniteGroup& g, int x, int y);
bool are_adjacent(const std::vector<Subgroup>& maximals, int x, int y);

}  // namespace epg
