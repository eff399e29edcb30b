#include "ncgraph/simple_graph.hpp"

#include <algorithm>
#include <queue>

namespace ncg {

int min_degree(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("min_degree of an empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("max_degree of an empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

SimpleGraph complement(const SimpleGraph& g) {
  const int m = g.vertex_count();
  SimpleGraph out(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

namespace {

// BFS levels from source; -1 marks unreachable vertices.
std::vector<int> bfs_levels(const SimpleGraph& g, int source) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    g.neighbors(u).for_each([&](int v) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    });
  }
  return dist;
}

}  // namespace

std::optional<int> distance(const SimpleGraph& g, int u, int v) {
  g.neighbors(u);  // range checks
  g.neighbors(v);
  int d = bfs_levels(g, u)[v];
  if (d == -1) return std::nullopt;
  return d;
}

std::optional<int> diameter(const SimpleGraph& g) {
  const int m = g.vertex_count();
  if (m == 0) return std::nullopt;
  int best = 0;
  for (int u = 0; u < m; ++u) {
    const std::vector<int> dist = bfs_levels(g, u);
    for (int v = 0; v < m; ++v) {
      if (dist[v] == -1) return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

bool is_connected(const SimpleGraph& g) {
  const int m = g.vertex_count();
  if (m <= 1) return true;
  const std::vector<int> dist = bfs_levels(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == -1; });
}

namespace {

ComponentDescriptor classify_component(const SimpleGraph& g, std::vector<int> verts) {
  const int k = static_cast<int>(verts.size());
  if (k == 1) return {ComponentKind::Isolated, 1, std::move(verts)};
  if (k == 2) return {ComponentKind::P2, 2, std::move(verts)};

  bool complete = true;
  for (int i = 0; i < k && complete; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!g.adjacent(verts[i], verts[j])) {
        complete = false;
        break;
      }
  if (complete) return {ComponentKind::Clique, k, std::move(verts)};

  // Degrees within a component equal degrees in the whole graph.
  bool two_regular = std::all_of(verts.begin(), verts.end(),
                                 [&](int v) { return g.degree(v) == 2; });
  if (two_regular && k >= 4) return {ComponentKind::Cycle, k, std::move(verts)};
  return {ComponentKind::Other, k, std::move(verts)};
}

}  // namespace

std::vector<ComponentDescriptor> components(const SimpleGraph& g) {
  const int m = g.vertex_count();
  std::vector<ComponentDescriptor> out;
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int root = 0; root < m; ++root) {
    if (seen[root]) continue;
    std::vector<int> verts;
    std::queue<int> q;
    seen[root] = true;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      verts.push_back(u);
      g.neighbors(u).for_each([&](int v) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      });
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(classify_component(g, std::move(verts)));
  }
  return out;
}

bool matches_clique_plus_isolated(const SimpleGraph& g, int clique_size,
                                  int isolated_count) {
  if (clique_size < 3) throw std::invalid_argument("clique_size must be at least 3");
  if (isolated_count < 0) throw std::invalid_argument("negative isolated_count");
  int cliques = 0;
  int isolated = 0;
  for (const auto& c : components(g)) {
    if (c.kind == ComponentKind::Clique && c.size == clique_size)
      ++cliques;
    else if (c.kind == ComponentKind::Isolated)
      ++isolated;
    else
      return false;
  }
  return cliques == 1 && isolated == isolated_count;
}

std::optional<P2Decomposition> union_of_p2_and_isolated(const SimpleGraph& g) {
  P2Decomposition d;
  for (const auto& c : components(g)) {
    if (c.kind == ComponentKind::P2)
      ++d.p2_count;
    else if (c.kind == ComponentKind::Isolated)
      ++d.isolated_count;
    else
      return std::nullopt;
  }
  return d;
}

bool is_single_cycle(const SimpleGraph& g) {
  const int m = g.vertex_count();
  if (m < 3 || !is_connected(g)) return false;
  for (int v = 0; v < m; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::optional<int> universal_vertex(const SimpleGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) return v;
  return std::nullopt;
}

bool is_complete(const SimpleGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.vertex_count() - 1) return false;
  return true;
}

}  // namespace ncg
