#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncgraph/simple_graph.hpp"

namespace ncg {

// Undirected DOT: one node statement per vertex (isolated vertices stay
// visible), then the edges with endpoints ascending. Output is stable for
// equal inputs.
std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels,
                   std::string_view graph_name = "G");

// {"m": vertex count, "edges": [[u, v], ...] with u < v ascending,
//  "labels": [...]}
std::string to_json(const SimpleGraph& g, const std::vector<std::string>& labels);

}  // namespace ncg
