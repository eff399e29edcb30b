#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgraph/bitset.hpp"

namespace ncg {

// Simple undirected graph on vertices 0..m-1, adjacency stored as one
// bitset row per vertex. No loops, no multi-edges; rows stay symmetric.
class SimpleGraph {
 public:
  explicit SimpleGraph(int m) : rows_(checked_size(m), Bitset(m)) {}

  int vertex_count() const { return static_cast<int>(rows_.size()); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[u].set(v);
    rows_[v].set(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && rows_[u].test(v);
  }

  int degree(int v) const {
    check_vertex(v);
    return rows_[v].count();
  }

  // Open neighborhood N(v).
  const Bitset& neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  // Closed neighborhood N[v].
  Bitset closed_neighborhood(int v) const {
    check_vertex(v);
    Bitset b = rows_[v];
    b.set(v);
    return b;
  }

  int edge_count() const {
    int total = 0;
    for (const auto& r : rows_) total += r.count();
    return total / 2;
  }

 private:
  static size_t checked_size(int m) {
    if (m < 0) throw std::invalid_argument("negative vertex count");
    return static_cast<size_t>(m);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  std::vector<Bitset> rows_;
};

int min_degree(const SimpleGraph& g);
int max_degree(const SimpleGraph& g);

SimpleGraph complement(const SimpleGraph& g);

// BFS distance; nullopt when v is unreachable from u.
std::optional<int> distance(const SimpleGraph& g, int u, int v);

// Greatest pairwise distance; nullopt when the graph is disconnected or
// has no vertices.
std::optional<int> diameter(const SimpleGraph& g);

// Graphs with at most one vertex count as connected.
bool is_connected(const SimpleGraph& g);

enum class ComponentKind { Isolated, P2, Clique, Cycle, Other };

// Classification precedence: size 1 is Isolated, size 2 is P2, complete
// components are Clique (so a triangle is Clique, not Cycle), connected
// 2-regular components of size >= 4 are Cycle, anything else is Other.
struct ComponentDescriptor {
  ComponentKind kind;
  int size;
  std::vector<int> vertices;  // ascending
};

// Connected components ordered by smallest contained vertex.
std::vector<ComponentDescriptor> components(const SimpleGraph& g);

// Exactly one complete component on clique_size >= 3 vertices plus
// isolated_count isolated vertices, nothing else.
bool matches_clique_plus_isolated(const SimpleGraph& g, int clique_size,
                                  int isolated_count);

struct P2Decomposition {
  int p2_count = 0;
  int isolated_count = 0;
};

// Engaged when every component is a single edge or an isolated vertex.
std::optional<P2Decomposition> union_of_p2_and_isolated(const SimpleGraph& g);

// One connected 2-regular component covering the whole graph; the triangle
// qualifies.
bool is_single_cycle(const SimpleGraph& g);

// Lowest-index vertex adjacent to all others, if any.
std::optional<int> universal_vertex(const SimpleGraph& g);

bool is_complete(const SimpleGraph& g);

}  // namespace ncg
