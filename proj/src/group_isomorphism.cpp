#include <functional>
#include <vector>

#include "ncgraph/finite_group.hpp"

namespace ncg {

namespace {

constexpr int kMaxIsoOrder = 24;

// Greedy generating sequence: scan elements in ascending order, keep those
// outside the closure of what is already kept.
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  Bitset closure(g.order());
  closure.set(0);
  for (int x = 1; x < g.order(); ++x) {
    if (closure.test(x)) continue;
    gens.push_back(x);
    Bitset gb(g.order());
    for (int t : gens) gb.set(t);
    closure = subgroup_generated(g, gb);
  }
  return gens;
}

}  // namespace

bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() > kMaxIsoOrder || h.order() > kMaxIsoOrder)
    throw OrderBoundExceeded("isomorphism search is limited to order 24");
  if (g.order() != h.order()) return false;
  if (order_profile(g) != order_profile(h)) return false;

  const int n = g.order();
  const std::vector<int> gens = generating_sequence(g);

  std::vector<int> g2h(n, -1), h2g(n, -1);
  g2h[0] = 0;
  h2g[0] = 0;

  // Maps a -> b, then closes the partial map under products against every
  // element already mapped. Records each new assignment in undo; returns
  // false on any clash with existing assignments or injectivity.
  auto try_assign = [&](int a, int b, std::vector<int>& undo) -> bool {
    std::vector<int> fresh;
    auto put = [&](int x, int y) -> bool {
      if (g2h[x] != -1) return g2h[x] == y;
      if (h2g[y] != -1) return false;
      g2h[x] = y;
      h2g[y] = x;
      undo.push_back(x);
      fresh.push_back(x);
      return true;
    };
    if (!put(a, b)) return false;
    for (size_t fi = 0; fi < fresh.size(); ++fi) {
      int x = fresh[fi];
      for (int m = 0; m < n; ++m) {
        if (g2h[m] == -1) continue;
        if (!put(g.mul(x, m), h.mul(g2h[x], g2h[m]))) return false;
        if (!put(g.mul(m, x), h.mul(g2h[m], g2h[x]))) return false;
      }
    }
    return true;
  };

  auto rollback = [&](const std::vector<int>& undo) {
    for (int x : undo) {
      h2g[g2h[x]] = -1;
      g2h[x] = -1;
    }
  };

  std::function<bool(size_t)> extend = [&](size_t gi) -> bool {
    if (gi == gens.size()) {
      for (int x = 0; x < n; ++x)
        if (g2h[x] == -1) return false;  // gens generate G, so never taken
      return true;
    }
    int a = gens[gi];
    if (g2h[a] != -1) return extend(gi + 1);
    for (int b = 1; b < n; ++b) {
      if (h2g[b] != -1) continue;
      if (h.element_order(b) != g.element_order(a)) continue;
      std::vector<int> undo;
      if (try_assign(a, b, undo) && extend(gi + 1)) return true;
      rollback(undo);
    }
    return false;
  };

  return extend(0);
}

}  // namespace ncg
