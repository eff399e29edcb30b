#include "ncgraph/noncyclic.hpp"

#include <stdexcept>
#include <utility>

namespace ncg {

std::vector<std::string> NonCyclicGraph::vertex_labels() const {
  std::vector<std::string> out;
  out.reserve(vertex_elements.size());
  for (int e : vertex_elements) out.push_back(group.element_name(e));
  return out;
}

NonCyclicGraph build_noncyclic_graph(const FiniteGroup& g) {
  if (is_cyclic_group(g))
    throw GroupIsCyclic("the non-cyclic graph of a cyclic group has no vertices");

  const int n = g.order();
  Bitset cyc = cyclicizer_of_group(g);

  std::vector<int> vertex_elements;
  std::vector<int> element_vertex(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    if (!cyc.test(x)) {
      element_vertex[x] = static_cast<int>(vertex_elements.size());
      vertex_elements.push_back(x);
    }

  const int m = static_cast<int>(vertex_elements.size());
  SimpleGraph graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!pair_generates_cyclic(g, vertex_elements[i], vertex_elements[j]))
        graph.add_edge(i, j);

  // <x,y> = <y,x>, so adjacency must come out symmetric.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (graph.adjacent(i, j) != graph.adjacent(j, i))
        throw std::logic_error("asymmetric adjacency in a non-cyclic graph");

  // A non-cyclic group keeps more than half of its elements as vertices.
  if (!(m < n && n < 2 * m))
    throw std::logic_error("vertex count outside (n/2, n) in a non-cyclic graph");

  return NonCyclicGraph{g, std::move(graph), std::move(vertex_elements),
                        std::move(element_vertex), std::move(cyc)};
}

NonCyclicGraph noncyclic_complement(const NonCyclicGraph& ncg) {
  NonCyclicGraph out = ncg;
  out.graph = complement(ncg.graph);
  return out;
}

bool degree_identity_check(const NonCyclicGraph& ncg) {
  const int n = ncg.group.order();
  for (size_t v = 0; v < ncg.vertex_elements.size(); ++v) {
    const int x = ncg.vertex_elements[v];
    if (ncg.graph.degree(static_cast<int>(v)) != n - cyclicizer_of(ncg.group, x).count())
      return false;
  }
  return true;
}

bool is_acceptable(const FiniteGroup& g) {
  bool has_two = false;
  bool has_three = false;
  for (int x = 1; x < g.order(); ++x) {
    const int ord = g.element_order(x);
    if (ord == 2)
      has_two = true;
    else if (ord == 3)
      has_three = true;
    else
      return false;
  }
  return has_two && has_three;
}

}  // namespace ncg
