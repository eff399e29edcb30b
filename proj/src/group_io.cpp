#include "ncgraph/group_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace ncg {

FiniteGroup parse_group_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidTableFile(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidTableFile("expected a JSON object");
  if (!doc.contains("table")) throw InvalidTableFile("missing \"table\"");

  const auto& jtable = doc["table"];
  if (!jtable.is_array()) throw InvalidTableFile("\"table\" must be an array of rows");
  std::vector<std::vector<int>> table;
  table.reserve(jtable.size());
  for (const auto& jrow : jtable) {
    if (!jrow.is_array()) throw InvalidTableFile("\"table\" rows must be arrays");
    std::vector<int> row;
    row.reserve(jrow.size());
    for (const auto& cell : jrow) {
      if (!cell.is_number_integer())
        throw InvalidTableFile("\"table\" entries must be integers");
      row.push_back(cell.get<int>());
    }
    table.push_back(std::move(row));
  }

  const int n = static_cast<int>(table.size());
  if (doc.contains("order")) {
    const auto& jorder = doc["order"];
    if (!jorder.is_number_integer() || jorder.get<int>() != n)
      throw InvalidTableFile("\"order\" does not match the table size");
  }

  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& jnames = doc["names"];
    if (!jnames.is_array()) throw InvalidTableFile("\"names\" must be an array");
    for (const auto& jname : jnames) {
      if (!jname.is_string()) throw InvalidTableFile("\"names\" entries must be strings");
      names.push_back(jname.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }

  try {
    return FiniteGroup::from_table(std::move(table), std::move(names));
  } catch (const GroupError& e) {
    throw InvalidTableFile(e.what());
  }
}

FiniteGroup load_group_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidTableFile("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str());
}

std::string group_to_json(const FiniteGroup& g) {
  nlohmann::json doc;
  const int n = g.order();
  doc["order"] = n;
  doc["names"] = g.element_names();
  nlohmann::json table = nlohmann::json::array();
  for (int x = 0; x < n; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (int y = 0; y < n; ++y) row.push_back(g.mul(x, y));
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc.dump(2);
}

}  // namespace ncg
