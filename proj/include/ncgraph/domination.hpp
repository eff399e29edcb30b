#pragma once

#include <stdexcept>
#include <vector>

#include "ncgraph/simple_graph.hpp"

namespace ncg {

struct SizeBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DominatingSetResult {
  int gamma = 0;
  std::vector<int> witness;  // ascending vertex indices, |witness| == gamma
};

// D dominates the graph when every vertex is in D or adjacent to a member.
bool is_dominating_set(const SimpleGraph& g, const Bitset& d);

// Exact domination number by branch and bound: greedy upper bound,
// ceil(m/(maxdeg+1)) lower bound, branching on the closed neighborhood of
// an uncovered vertex with the fewest covering candidates. Deterministic:
// ties break toward the lowest vertex index. Requires 1 <= m <= 64.
DominatingSetResult domination_number(const SimpleGraph& g);

// Independent oracle: scans all vertex subsets. Requires m <= 20.
int brute_force_gamma(const SimpleGraph& g);

// Sanity bundle tying a graph to its complement:
//   (a) without isolated vertices, gamma <= m/2
//   (b) gamma(G) + gamma(complement) <= m + 1
//   (c) gamma(G) * gamma(complement) <= m
//   (d) gamma(G) == 1 iff some vertex has degree m - 1
bool gamma_bounds_check(const SimpleGraph& g);

}  // namespace ncg
