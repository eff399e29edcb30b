#pragma once

#include <string>
#include <vector>

#include "ncgraph/finite_group.hpp"
#include "ncgraph/simple_graph.hpp"

namespace ncg {

struct GroupIsCyclic : GroupError {
  using GroupError::GroupError;
};

/**
 * The non-cyclic graph of a finite non-cyclic group G. Vertices are the
 * elements outside Cyc(G) = { y : <x,y> cyclic for all x }, listed in
 * ascending element order; two vertices are adjacent exactly when they
 * generate a non-cyclic subgroup.
 */
struct NonCyclicGraph {
  FiniteGroup group;
  SimpleGraph graph;
  std::vector<int> vertex_elements;  // vertex -> element index, ascending
  std::vector<int> element_vertex;   // element index -> vertex, -1 outside
  Bitset cyc;                        // Cyc(G)

  int vertex_of(int element) const { return element_vertex[element]; }

  const std::string& vertex_name(int v) const {
    return group.element_name(vertex_elements[v]);
  }

  std::vector<std::string> vertex_labels() const;
};

// Throws GroupIsCyclic for cyclic input; the graph would have no vertices.
NonCyclicGraph build_noncyclic_graph(const FiniteGroup& g);

// Same group and vertex labelling, adjacency complemented: vertices become
// adjacent exactly when they generate a cyclic subgroup.
NonCyclicGraph noncyclic_complement(const NonCyclicGraph& ncg);

// deg(x) = |G| - |cyclicizer_of(x)| must hold at every vertex of the
// non-complemented graph.
bool degree_identity_check(const NonCyclicGraph& ncg);

// A group is acceptable when it has elements of order 2 and of order 3 and
// no element of any other order except the identity.
bool is_acceptable(const FiniteGroup& g);

}  // namespace ncg
