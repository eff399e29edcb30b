#include "ncgraph/graph_export.hpp"

#include <stdexcept>

#include <json.hpp>

namespace ncg {

namespace {

// DOT identifiers are always emitted quoted; escape the two characters
// that can break out of a quoted id.
std::string dot_quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void check_labels(const SimpleGraph& g, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != g.vertex_count())
    throw std::invalid_argument("label count does not match vertex count");
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels,
                   std::string_view graph_name) {
  check_labels(g, labels);
  std::string out = "graph " + dot_quoted(graph_name) + " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out += "  " + dot_quoted(labels[v]) + ";\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v))
        out += "  " + dot_quoted(labels[u]) + " -- " + dot_quoted(labels[v]) + ";\n";
  out += "}\n";
  return out;
}

std::string to_json(const SimpleGraph& g, const std::vector<std::string>& labels) {
  check_labels(g, labels);
  nlohmann::json doc;
  doc["m"] = g.vertex_count();
  nlohmann::json edges = nlohmann::json::array();
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["labels"] = labels;
  return doc.dump(2);
}

}  // namespace ncg
