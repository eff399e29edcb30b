#include "ncgraph/catalog.hpp"

#include <utility>

#include "ncgraph/noncyclic.hpp"

namespace ncg {

std::set<std::string> group_tags(const FiniteGroup& g) {
  std::set<std::string> tags;
  if (is_cyclic_group(g)) tags.insert("cyclic");
  if (is_abelian(g)) tags.insert("abelian");
  if (is_elementary_abelian_2(g)) tags.insert("elementary_abelian_2");
  if (is_acceptable(g)) tags.insert("acceptable");
  if (g.order() >= 6 && g.order() % 2 == 0 &&
      groups_isomorphic(g, dihedral_group(g.order())))
    tags.insert("dihedral");
  return tags;
}

std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&out](std::string name, FiniteGroup g) {
    std::set<std::string> tags = group_tags(g);
    out.push_back(CatalogEntry{std::move(name), std::move(g), std::move(tags)});
  };

  add("Z1", cyclic_group(1));
  add("Z2", cyclic_group(2));
  add("Z3", cyclic_group(3));
  add("Z4", cyclic_group(4));
  add("Z2^2", elementary_abelian_2(2));
  add("Z5", cyclic_group(5));
  add("Z6", cyclic_group(6));
  add("S3", symmetric_group(3));
  add("Z7", cyclic_group(7));
  add("Z8", cyclic_group(8));
  add("Z4xZ2", direct_product(cyclic_group(4), cyclic_group(2)));
  add("Z2^3", elementary_abelian_2(3));
  add("D8", dihedral_group(8));
  add("Q8", dicyclic_group(8));
  add("Z9", cyclic_group(9));
  add("Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3)));
  add("Z10", cyclic_group(10));
  add("D10", dihedral_group(10));
  add("Z11", cyclic_group(11));
  add("Z12", cyclic_group(12));
  add("Z6xZ2", direct_product(cyclic_group(6), cyclic_group(2)));
  add("D12", dihedral_group(12));
  add("A4", alternating_group(4));
  add("Dic3", dicyclic_group(12));
  add("Z13", cyclic_group(13));
  add("Z14", cyclic_group(14));
  add("D14", dihedral_group(14));
  add("Z15", cyclic_group(15));
  add("Z2^4", elementary_abelian_2(4));
  add("D16", dihedral_group(16));
  add("D20", dihedral_group(20));
  return out;
}

std::vector<CatalogEntry> noncyclic_catalog() {
  std::vector<CatalogEntry> out;
  for (auto& e : standard_catalog())
    if (!e.tags.contains("cyclic")) out.push_back(std::move(e));
  return out;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               std::string_view name) {
  for (const auto& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace ncg
