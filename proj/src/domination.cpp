#include "ncgraph/domination.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ncg {

bool is_dominating_set(const SimpleGraph& g, const Bitset& d) {
  if (d.size() != g.vertex_count())
    throw std::invalid_argument("candidate set sized for a different graph");
  Bitset covered(g.vertex_count());
  d.for_each([&](int v) { covered |= g.closed_neighborhood(v); });
  return covered == Bitset::all(g.vertex_count());
}

namespace {

// Closed neighborhoods packed into single words; callers enforce m <= 64.
std::vector<uint64_t> closed_rows(const SimpleGraph& g) {
  const int m = g.vertex_count();
  std::vector<uint64_t> rows(static_cast<size_t>(m), 0);
  for (int v = 0; v < m; ++v) {
    uint64_t row = uint64_t{1} << v;
    g.neighbors(v).for_each([&](int u) { row |= uint64_t{1} << u; });
    rows[v] = row;
  }
  return rows;
}

uint64_t full_mask(int m) {
  return m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
}

std::vector<int> mask_to_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

DominatingSetResult domination_number(const SimpleGraph& g) {
  const int m = g.vertex_count();
  if (m < 1) throw std::invalid_argument("domination_number of an empty graph");
  if (m > 64) throw SizeBoundExceeded("domination solver handles at most 64 vertices");

  const std::vector<uint64_t> nbhd = closed_rows(g);
  const uint64_t full = full_mask(m);
  const int maxdeg = max_degree(g);

  // Isolated vertices sit in every dominating set.
  uint64_t forced = 0;
  uint64_t forced_cover = 0;
  for (int v = 0; v < m; ++v)
    if (g.degree(v) == 0) {
      forced |= uint64_t{1} << v;
      forced_cover |= nbhd[v];
    }

  // Greedy upper bound: repeatedly take the vertex covering the most still
  // uncovered vertices, lowest index on ties.
  uint64_t greedy_set = forced;
  uint64_t covered = forced_cover;
  while (covered != full) {
    int pick = -1;
    int pick_gain = 0;
    for (int v = 0; v < m; ++v) {
      int gain = std::popcount(nbhd[v] & ~covered);
      if (gain > pick_gain) {
        pick_gain = gain;
        pick = v;
      }
    }
    greedy_set |= uint64_t{1} << pick;
    covered |= nbhd[pick];
  }

  uint64_t best_set = greedy_set;
  int best_size = std::popcount(greedy_set);
  const int global_lower = (m + maxdeg) / (maxdeg + 1);

  // Every dominating set contains a vertex of N[u] for each uncovered u;
  // branch on the uncovered vertex with the fewest candidates.
  auto dfs = [&](auto&& self, uint64_t chosen, int chosen_size, uint64_t cov) -> void {
    if (cov == full) {
      if (chosen_size < best_size) {
        best_size = chosen_size;
        best_set = chosen;
      }
      return;
    }
    const int uncovered = std::popcount(full & ~cov);
    const int remaining_lower = (uncovered + maxdeg) / (maxdeg + 1);
    if (chosen_size + remaining_lower >= best_size) return;

    int branch = -1;
    int branch_options = m + 1;
    uint64_t rest = full & ~cov;
    while (rest != 0) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      int options = std::popcount(nbhd[u]);
      if (options < branch_options) {
        branch_options = options;
        branch = u;
      }
    }

    uint64_t candidates = nbhd[branch];
    while (candidates != 0) {
      int c = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, chosen | (uint64_t{1} << c), chosen_size + 1, cov | nbhd[c]);
    }
  };
  dfs(dfs, forced, std::popcount(forced), forced_cover);

  DominatingSetResult result;
  result.gamma = best_size;
  result.witness = mask_to_vertices(best_set);

  // Bounds promised by the algorithm; a violation is a solver defect.
  if (best_size < global_lower || best_size > std::popcount(greedy_set))
    throw std::logic_error("domination solver produced an out-of-bounds result");
  Bitset check(m);
  for (int v : result.witness) check.set(v);
  if (!is_dominating_set(g, check))
    throw std::logic_error("domination solver produced a non-dominating witness");
  return result;
}

int brute_force_gamma(const SimpleGraph& g) {
  const int m = g.vertex_count();
  if (m > 20) throw SizeBoundExceeded("brute force gamma handles at most 20 vertices");
  if (m == 0) return 0;

  const std::vector<uint64_t> nbhd = closed_rows(g);
  const uint64_t full = full_mask(m);
  int best = m;  // the whole vertex set always dominates
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    uint64_t covered = 0;
    uint64_t rest = mask;
    while (rest != 0) {
      covered |= nbhd[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    if (covered == full) best = size;
  }
  return best;
}

bool gamma_bounds_check(const SimpleGraph& g) {
  const int m = g.vertex_count();
  if (m < 1) throw std::invalid_argument("gamma_bounds_check of an empty graph");
  const int gamma = domination_number(g).gamma;
  const int gamma_bar = domination_number(complement(g)).gamma;

  if (min_degree(g) >= 1 && 2 * gamma > m) return false;
  if (gamma + gamma_bar > m + 1) return false;
  if (gamma * gamma_bar > m) return false;
  if ((gamma == 1) != (max_degree(g) == m - 1)) return false;
  return true;
}

}  // namespace ncg
