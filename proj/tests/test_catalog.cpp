#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ncgraph/catalog.hpp"

using namespace ncg;

TEST_CASE("catalog names and order") {
  const auto catalog = standard_catalog();
  const std::vector<std::string> expected = {
      "Z1",  "Z2",    "Z3",  "Z4",  "Z2^2", "Z5",  "Z6",  "S3",
      "Z7",  "Z8",    "Z4xZ2", "Z2^3", "D8",  "Q8",  "Z9",  "Z3xZ3",
      "Z10", "D10",   "Z11", "Z12", "Z6xZ2", "D12", "A4",  "Dic3",
      "Z13", "Z14",   "D14", "Z15", "Z2^4", "D16", "D20"};
  REQUIRE(catalog.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) CHECK(catalog[i].name == expected[i]);

  for (size_t i = 1; i < catalog.size(); ++i)
    CHECK(catalog[i - 1].group.order() <= catalog[i].group.order());
}

TEST_CASE("catalog covers every group of order 1..15") {
  std::map<int, int> per_order;
  for (const auto& entry : standard_catalog()) ++per_order[entry.group.order()];
  const std::map<int, int> expected = {{1, 1},  {2, 1},  {3, 1}, {4, 2},  {5, 1},
                                       {6, 2},  {7, 1},  {8, 5}, {9, 2},  {10, 2},
                                       {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1},
                                       {16, 2}, {20, 1}};
  CHECK(per_order == expected);
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
  const auto catalog = standard_catalog();
  for (size_t i = 0; i < catalog.size(); ++i)
    for (size_t j = i + 1; j < catalog.size(); ++j) {
      if (catalog[i].group.order() != catalog[j].group.order()) continue;
      CHECK_MESSAGE(!groups_isomorphic(catalog[i].group, catalog[j].group),
                    catalog[i].name, " vs ", catalog[j].name);
    }
  for (const auto& entry : catalog) CHECK(groups_isomorphic(entry.group, entry.group));
}

TEST_CASE("tags are recomputed facts") {
  for (const auto& entry : standard_catalog()) {
    CHECK_MESSAGE(group_tags(entry.group) == entry.tags, entry.name);
    CHECK(entry.tags.count("cyclic") == (is_cyclic_group(entry.group) ? 1 : 0));
    CHECK(entry.tags.count("abelian") == (is_abelian(entry.group) ? 1 : 0));
  }

  const auto catalog = standard_catalog();
  const auto tags_of = [&](const std::string& name) {
    return find_entry(catalog, name)->tags;
  };
  CHECK(tags_of("S3") == std::set<std::string>{"acceptable", "dihedral"});
  CHECK(tags_of("Q8") == std::set<std::string>{});
  CHECK(tags_of("A4") == std::set<std::string>{"acceptable"});
  CHECK(tags_of("D12") == std::set<std::string>{"dihedral"});
  CHECK(tags_of("Z2^4") == std::set<std::string>{"abelian", "elementary_abelian_2"});
  CHECK(tags_of("Z12") == std::set<std::string>{"abelian", "cyclic"});
}

TEST_CASE("noncyclic catalog filters the cyclic entries") {
  const auto all = standard_catalog();
  const auto nc = noncyclic_catalog();
  CHECK(nc.size() == 16);

  size_t pos = 0;
  for (const auto& entry : nc) {
    CHECK_FALSE(is_cyclic_group(entry.group));
    CHECK(entry.tags.count("cyclic") == 0);
    while (pos < all.size() && all[pos].name != entry.name) ++pos;
    CHECK_MESSAGE(pos < all.size(), "order of ", entry.name, " differs");
  }

  int cyclic = 0;
  for (const auto& entry : all)
    if (is_cyclic_group(entry.group)) ++cyclic;
  CHECK(cyclic + static_cast<int>(nc.size()) == static_cast<int>(all.size()));
}

TEST_CASE("find_entry") {
  const auto catalog = standard_catalog();
  const CatalogEntry* q8 = find_entry(catalog, "Q8");
  REQUIRE(q8 != nullptr);
  CHECK(q8->group.order() == 8);
  CHECK(find_entry(catalog, "Z42") == nullptr);
  CHECK(find_entry(catalog, "") == nullptr);
}

TEST_CASE("element orders divide the group order") {
  for (const auto& entry : standard_catalog())
    for (int x = 0; x < entry.group.order(); ++x)
      CHECK(entry.group.order() % entry.group.element_order(x) == 0);
}
