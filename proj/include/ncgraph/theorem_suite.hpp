#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgraph/catalog.hpp"
#include "ncgraph/noncyclic.hpp"

namespace ncg {

enum class CheckStatus { Pass, Fail, NotApplicable };

struct CheckResult {
  std::string theorem;  // stable check identifier
  std::string group;    // catalog entry name
  CheckStatus status;
  std::string witness;  // failure details or the reason a check is n/a
};

struct VerificationReport {
  std::vector<CheckResult> entries;

  bool all_passed() const;
  int count(CheckStatus s) const;
};

// Per-group state shared by the checks. Graphs are only built for
// non-cyclic groups.
struct GroupContext {
  std::string name;
  FiniteGroup group;
  bool cyclic = false;
  std::optional<NonCyclicGraph> ncg;      // the graph itself
  std::optional<NonCyclicGraph> ncg_bar;  // its complement
};

GroupContext make_group_context(std::string name, const FiniteGroup& g);

// Each check decides its own applicability from the context and names
// itself in the returned result.
namespace checks {
CheckResult connected_and_diameter(const GroupContext& ctx);
CheckResult diameter_one_iff_elementary_abelian(const GroupContext& ctx);
CheckResult cyclicizer_index(const GroupContext& ctx);
CheckResult vertex_count_bounds(const GroupContext& ctx);
CheckResult inverse_neighborhood(const GroupContext& ctx);
CheckResult min_degree_bound(const GroupContext& ctx);
CheckResult involutions_adjacent(const GroupContext& ctx);
CheckResult universal_vertex_order(const GroupContext& ctx);
CheckResult complement_degree_one_pairing(const GroupContext& ctx);
CheckResult abelian_isolated_degree_one(const GroupContext& ctx);
CheckResult complement_common_neighbor(const GroupContext& ctx);
CheckResult complement_k3_characterization(const GroupContext& ctx);
CheckResult complement_k4_characterization(const GroupContext& ctx);
CheckResult single_cycle_characterization(const GroupContext& ctx);
CheckResult acceptable_star_subgroup(const GroupContext& ctx);
CheckResult acceptable_complement_shape(const GroupContext& ctx);
CheckResult gamma_upper_bound(const GroupContext& ctx);
CheckResult complement_gamma_matching(const GroupContext& ctx);
CheckResult gamma_sum_classification(const GroupContext& ctx);
CheckResult domination_bounds(const GroupContext& ctx);
}  // namespace checks

// Connectivity, diameter, degree and neighborhood facts about the graph
// and its complement.
VerificationReport verify_structural_lemmas(const std::vector<CatalogEntry>& catalog);

// Shape characterizations: which groups give a K3 or K4 plus isolated
// vertices in the complement, and which graph is a single cycle.
VerificationReport verify_characterizations(const std::vector<CatalogEntry>& catalog);

// Facts about groups whose element orders are exactly {1, 2, 3}.
VerificationReport verify_acceptable_theory(const std::vector<CatalogEntry>& catalog);

// Domination-number bounds and the classification of gamma + gamma-bar.
VerificationReport verify_domination_theorems(const std::vector<CatalogEntry>& catalog);

// All four suites over the same catalog, concatenated in a fixed order.
VerificationReport run_all(const std::vector<CatalogEntry>& catalog);

// [{"theorem": ..., "group": ..., "status": "pass|fail|na", "witness": ...}]
std::string report_to_json(const VerificationReport& report);

}  // namespace ncg
