#include "ncgraph/cli.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncgraph/catalog.hpp"
#include "ncgraph/domination.hpp"
#include "ncgraph/graph_export.hpp"
#include "ncgraph/group_io.hpp"
#include "ncgraph/noncyclic.hpp"
#include "ncgraph/theorem_suite.hpp"

namespace ncg {

namespace {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// A selector is a catalog name first, a JSON table file second.
NamedGroup resolve_group(const std::string& selector) {
  const auto catalog = standard_catalog();
  if (const CatalogEntry* entry = find_entry(catalog, selector))
    return {entry->name, entry->group};
  if (std::filesystem::exists(selector))
    return {selector, load_group_json(selector)};
  throw UnknownGroup("unknown group: " + selector +
                     " (not a catalog name and not a readable file)");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_group_list(std::ostream& out) {
  for (const auto& entry : standard_catalog()) {
    out << entry.name << " " << entry.group.order();
    char sep = ' ';
    for (const auto& tag : entry.tags) {
      out << sep << tag;
      sep = ',';
    }
    out << "\n";
  }
  return 0;
}

int cmd_group_info(const std::string& selector, std::ostream& out) {
  const NamedGroup ng = resolve_group(selector);
  out << "name: " << ng.name << "\n";
  out << "order: " << ng.group.order() << "\n";
  out << "cyclic: " << yes_no(is_cyclic_group(ng.group)) << "\n";
  out << "abelian: " << yes_no(is_abelian(ng.group)) << "\n";
  out << "order profile:";
  for (const auto& [ord, count] : order_profile(ng.group))
    out << " " << ord << "^" << count;
  out << "\n";
  out << "|Cyc(G)|: " << cyclicizer_of_group(ng.group).count() << "\n";
  out << "acceptable: " << yes_no(is_acceptable(ng.group)) << "\n";
  return 0;
}

int cmd_graph(const std::string& selector, bool complement_flag,
              const std::string& format, std::ostream& out) {
  const NamedGroup ng = resolve_group(selector);
  NonCyclicGraph ncg = build_noncyclic_graph(ng.group);
  std::string graph_name = ng.name;
  if (complement_flag) {
    ncg = noncyclic_complement(ncg);
    graph_name += " complement";
  }
  const std::vector<std::string> labels = ncg.vertex_labels();
  if (format == "dot") {
    out << to_dot(ncg.graph, labels, graph_name);
  } else if (format == "json") {
    out << to_json(ncg.graph, labels) << "\n";
  } else {
    out << graph_name << ": " << ncg.graph.vertex_count() << " vertices, "
        << ncg.graph.edge_count() << " edges\n";
    for (int u = 0; u < ncg.graph.vertex_count(); ++u)
      for (int v = u + 1; v < ncg.graph.vertex_count(); ++v)
        if (ncg.graph.adjacent(u, v))
          out << labels[u] << " -- " << labels[v] << "\n";
  }
  return 0;
}

int cmd_gamma(const std::string& selector, bool complement_flag, std::ostream& out) {
  const NamedGroup ng = resolve_group(selector);
  NonCyclicGraph ncg = build_noncyclic_graph(ng.group);
  if (complement_flag) ncg = noncyclic_complement(ncg);
  const DominatingSetResult result = domination_number(ncg.graph);
  nlohmann::json doc;
  doc["gamma"] = result.gamma;
  nlohmann::json witness = nlohmann::json::array();
  for (int v : result.witness) witness.push_back(ncg.vertex_name(v));
  doc["witness"] = std::move(witness);
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_verify(int max_order, const std::string& report_path, std::ostream& out,
               std::ostream& err) {
  std::vector<CatalogEntry> catalog;
  for (auto& entry : standard_catalog())
    if (entry.group.order() <= max_order) catalog.push_back(std::move(entry));

  const VerificationReport report = run_all(catalog);

  // Aggregate per check id, in first-appearance order.
  std::vector<std::string> ids;
  std::map<std::string, std::array<int, 3>> tally;
  for (const auto& e : report.entries) {
    if (!tally.count(e.theorem)) ids.push_back(e.theorem);
    auto& t = tally[e.theorem];
    if (e.status == CheckStatus::Pass)
      ++t[0];
    else if (e.status == CheckStatus::Fail)
      ++t[1];
    else
      ++t[2];
  }
  for (const auto& id : ids) {
    const auto& t = tally[id];
    out << id << ": " << t[0] << " pass, " << t[1] << " fail, " << t[2] << " n/a\n";
  }
  for (const auto& e : report.entries)
    if (e.status == CheckStatus::Fail)
      out << "FAIL " << e.theorem << " " << e.group << ": " << e.witness << "\n";
  out << "total: " << report.entries.size() << " checks, "
      << report.count(CheckStatus::Pass) << " pass, "
      << report.count(CheckStatus::Fail) << " fail, "
      << report.count(CheckStatus::NotApplicable) << " n/a\n";

  if (!report_path.empty()) {
    std::ofstream file(report_path);
    file << report_to_json(report) << "\n";
    if (!file) {
      err << "error: cannot write " << report_path << "\n";
      return 2;
    }
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"non-cyclic group graphs: construction, invariants, verification"};
  app.require_subcommand(1);

  CLI::App* group = app.add_subcommand("group", "catalog access");
  group->require_subcommand(1);
  group->add_subcommand("list", "list the group catalog");
  std::string info_selector;
  CLI::App* info = group->add_subcommand("info", "describe one group");
  info->add_option("name", info_selector, "catalog name or JSON table file")->required();

  std::string graph_selector;
  bool graph_complement = false;
  std::string graph_format = "text";
  CLI::App* graph = app.add_subcommand("graph", "emit the non-cyclic graph");
  graph->add_option("name", graph_selector, "catalog name or JSON table file")->required();
  graph->add_flag("--complement", graph_complement, "emit the complement instead");
  graph->add_option("--format", graph_format, "dot, json or text")
      ->check(CLI::IsMember({"dot", "json", "text"}));

  std::string gamma_selector;
  bool gamma_complement = false;
  CLI::App* gamma = app.add_subcommand("gamma", "exact domination number");
  gamma->add_option("name", gamma_selector, "catalog name or JSON table file")->required();
  gamma->add_flag("--complement", gamma_complement, "use the complement");

  int max_order = std::numeric_limits<int>::max();
  std::string report_path;
  CLI::App* verify = app.add_subcommand("verify", "run every check over the catalog");
  verify->add_option("--max-order", max_order, "only groups of order <= N");
  verify->add_option("--report", report_path, "also write the JSON report here");

  try {
    // CLI11 consumes the argument vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group->parsed()) {
      if (group->got_subcommand("list")) return cmd_group_list(out);
      return cmd_group_info(info_selector, out);
    }
    if (graph->parsed())
      return cmd_graph(graph_selector, graph_complement, graph_format, out);
    if (gamma->parsed()) return cmd_gamma(gamma_selector, gamma_complement, out);
    return cmd_verify(max_order, report_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ncg
