#include "epgraph/epg.hpp"

#include <string>

#include "epgraph/errors.hpp"

namespace epg {

Graph enhanced_power_graph(const FiniteGroup& g) {
  return enhanced_power_graph(g, maximal_cyclic_subgroups(g));
}

Graph enhanced_power_graph(const FiniteGroup& g, const std::vector<Subgroup>& maximals) {
  Graph graph(g.order());
  for (const Subgroup& m : maximals) {
    std::vector<int> members = m.members.to_vector();
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        graph.add_edge(members[i], members[j]);
      }
    }
  }
  graph.labels.reserve(g.order());
  for (int i = 0; i < g.order(); ++i) {
    graph.labels.push_back(std::to_string(i) + " (ord " + std::to_string(g.element_order(i)) +
                           ")");
  }
  return graph;
}

Graph proper_enhanced_power_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw TrivialGroup("proper enhanced power graph needs |G| >= 2");
  Graph full = enhanced_power_graph(g);
  Graph out(g.order() - 1);
  // Vertex j of the proper graph is group element j+1.
  for (int i = 1; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (full.adjacent(i, j)) out.add_edge(i - 1, j - 1);
    }
  }
  out.labels.reserve(out.vertex_count());
  for (int i = 1; i < g.order(); ++i) out.labels.push_back(full.labels[i]);
  return out;
}

bool are_adjacent(const FiniteGroup& g, int x, int y) {
  if (x == y) throw SameVertex("adjacency is defined for distinct elements");
  return are_adjacent(maximal_cyclic_subgroups(g), x, y);
}

bool are_adjacent(const std::vector<Subgroup>& maximals, int x, int y) {
  if (x == y) throw SameVertex("adjacency is defined for distinct elements");
  for (const Subgroup& m : maximals) {
    if (m.members.contains(x) && m.members.contains(y)) return true;
  }
  return false;
}

}  // namespace epg
