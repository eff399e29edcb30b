#include "ncgraph/finite_group.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ncg {

namespace {

std::string entry(int i, int j) {
  return "table[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupError("empty Cayley table");
  if (static_cast<int>(names.size()) != n)
    throw GroupError("expected " + std::to_string(n) + " element names, got " +
                     std::to_string(names.size()));

  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw GroupError("row " + std::to_string(i) + " has length " +
                       std::to_string(table[i].size()) + ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        throw NotLatinSquare(entry(i, j) + " = " + std::to_string(v) + " is out of range");
      g.table_[static_cast<size_t>(i) * n + j] = v;
    }
  }

  for (int i = 0; i < n; ++i) {
    if (g.table_[i] != i)
      throw NoIdentityAtZero("table[0][" + std::to_string(i) + "] = " +
                             std::to_string(g.table_[i]) + ", expected " + std::to_string(i));
    if (g.table_[static_cast<size_t>(i) * n] != i)
      throw NoIdentityAtZero(entry(i, 0) + " = " +
                             std::to_string(g.table_[static_cast<size_t>(i) * n]) +
                             ", expected " + std::to_string(i));
  }

  std::vector<int> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < n; ++j) {
      int v = g.table_[static_cast<size_t>(i) * n + j];
      if (seen[v] != -1)
        throw NotLatinSquare("row " + std::to_string(i) + " repeats value " + std::to_string(v) +
                             " at columns " + std::to_string(seen[v]) + " and " + std::to_string(j));
      seen[v] = j;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < n; ++i) {
      int v = g.table_[static_cast<size_t>(i) * n + j];
      if (seen[v] != -1)
        throw NotLatinSquare("column " + std::to_string(j) + " repeats value " + std::to_string(v) +
                             " at rows " + std::to_string(seen[v]) + " and " + std::to_string(i));
      seen[v] = i;
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ij = g.table_[static_cast<size_t>(i) * n + j];
      for (int k = 0; k < n; ++k) {
        int jk = g.table_[static_cast<size_t>(j) * n + k];
        if (g.table_[static_cast<size_t>(ij) * n + k] != g.table_[static_cast<size_t>(i) * n + jk])
          throw NotAssociative("associativity fails at (" + std::to_string(i) + ", " +
                               std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    }

  g.inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g.table_[static_cast<size_t>(i) * n + j] == 0) {
        if (g.table_[static_cast<size_t>(j) * n + i] != 0)
          throw GroupError("element " + std::to_string(i) + " has no two-sided inverse");
        g.inverse_[i] = j;
        break;
      }
    if (g.inverse_[i] == -1)
      throw GroupError("element " + std::to_string(i) + " has no inverse");
  }

  g.order_.resize(n);
  for (int i = 0; i < n; ++i) {
    int ord = 1;
    int cur = i;
    while (cur != 0) {
      cur = g.table_[static_cast<size_t>(cur) * n + i];
      ++ord;
      if (ord > n) throw GroupError("element order exceeds group order");
    }
    g.order_[i] = ord;
  }

  g.names_ = std::move(names);
  return g;
}

int FiniteGroup::element_by_name(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

Bitset subgroup_generated(const FiniteGroup& g, const Bitset& gens) {
  const int n = g.order();
  if (gens.size() != n)
    throw std::invalid_argument("generator set sized for a different group");
  if (gens.none()) throw std::invalid_argument("empty generating set");

  Bitset h(n);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!h.test(x)) {
      h.set(x);
      work.push_back(x);
    }
  };
  add(0);
  gens.for_each(add);

  const std::vector<int> gen_list = gens.to_vector();
  for (size_t qi = 0; qi < work.size(); ++qi) {
    int u = work[qi];
    for (int w : gen_list) {
      add(g.mul(u, w));
      add(g.mul(w, u));
    }
  }
  return h;
}

bool is_subgroup_subset(const FiniteGroup& g, const Bitset& h) {
  if (h.size() != g.order())
    throw std::invalid_argument("subset sized for a different group");
  if (!h.test(0)) return false;
  const std::vector<int> elems = h.to_vector();
  for (int x : elems)
    for (int y : elems)
      if (!h.test(g.mul(x, y))) return false;
  return true;
}

namespace {

// Assumes h really is a subgroup.
bool subgroup_is_cyclic(const FiniteGroup& g, const Bitset& h) {
  const int target = h.count();
  bool found = false;
  h.for_each([&](int z) { found = found || g.element_order(z) == target; });
  return found;
}

}  // namespace

bool is_cyclic_subset(const FiniteGroup& g, const Bitset& h) {
  if (h.size() != g.order())
    throw std::invalid_argument("subset sized for a different group");
  if (!h.test(0)) throw NotASubgroup("subset does not contain the identity");
  const std::vector<int> elems = h.to_vector();
  for (int x : elems)
    for (int y : elems) {
      int p = g.mul(x, y);
      if (!h.test(p))
        throw NotASubgroup("subset is not closed: " + std::to_string(x) + " * " +
                           std::to_string(y) + " = " + std::to_string(p) + " is outside");
    }
  return subgroup_is_cyclic(g, h);
}

bool pair_generates_cyclic(const FiniteGroup& g, int x, int y) {
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
    throw std::out_of_range("element index out of range");
  Bitset gens(g.order());
  gens.set(x);
  gens.set(y);
  return subgroup_is_cyclic(g, subgroup_generated(g, gens));
}

Bitset cyclicizer_of(const FiniteGroup& g, int x) {
  Bitset out(g.order());
  for (int y = 0; y < g.order(); ++y)
    if (pair_generates_cyclic(g, x, y)) out.set(y);
  return out;
}

Bitset cyclicizer_of_group(const FiniteGroup& g) {
  Bitset acc = Bitset::all(g.order());
  for (int x = 0; x < g.order(); ++x) acc &= cyclicizer_of(g, x);
  return acc;
}

Bitset centralizer(const FiniteGroup& g, int x) {
  Bitset out(g.order());
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.set(y);
  return out;
}

Bitset center(const FiniteGroup& g) {
  Bitset acc = Bitset::all(g.order());
  for (int x = 0; x < g.order(); ++x) acc &= centralizer(g, x);
  return acc;
}

bool is_abelian(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_cyclic_group(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

bool is_elementary_abelian_2(const FiniteGroup& g) {
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) != 2) return false;
  return true;
}

std::pair<Bitset, Bitset> order_two_and_three_sets(const FiniteGroup& g) {
  Bitset two(g.order());
  Bitset three(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2) two.set(x);
    if (g.element_order(x) == 3) three.set(x);
  }
  return {two, three};
}

std::vector<std::pair<int, int>> order_profile(const FiniteGroup& g) {
  std::map<int, int> counts;
  for (int x = 0; x < g.order(); ++x) ++counts[g.element_order(x)];
  return {counts.begin(), counts.end()};
}

}  // namespace ncg
