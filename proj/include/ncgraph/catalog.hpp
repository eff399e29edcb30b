#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncgraph/finite_group.hpp"

namespace ncg {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  std::set<std::string> tags;
};

// Tags recomputed from the table: cyclic, abelian, elementary_abelian_2,
// acceptable, and dihedral (order >= 6 and isomorphic to the dihedral
// group of that order).
std::set<std::string> group_tags(const FiniteGroup& g);

// Every group of order 1..15 up to isomorphism, plus Z2^4, D16 and D20.
// Ordered by group order; names are the usual short forms (Z12, Z2^3,
// Z4xZ2, D8, Q8, Dic3, S3, A4, ...).
std::vector<CatalogEntry> standard_catalog();

// The non-cyclic entries of standard_catalog, same order.
std::vector<CatalogEntry> noncyclic_catalog();

// Entry with the given name, or nullptr.
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               std::string_view name);

}  // namespace ncg
