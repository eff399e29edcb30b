#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncgraph/bitset.hpp"

namespace ncg {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cayley table validation failures. Messages name the first offending entry.
struct NotLatinSquare : GroupError {
  using GroupError::GroupError;
};
struct NotAssociative : GroupError {
  using GroupError::GroupError;
};
struct NoIdentityAtZero : GroupError {
  using GroupError::GroupError;
};

struct NotASubgroup : GroupError {
  using GroupError::GroupError;
};
struct SizeLimitExceeded : GroupError {
  using GroupError::GroupError;
};
struct OrderBoundExceeded : GroupError {
  using GroupError::GroupError;
};

/**
 * A finite group given by its Cayley table. Element 0 is always the
 * identity. Construction validates the table (Latin square, identity at
 * index 0, associativity, two-sided inverses); instances are immutable
 * afterwards, so every FiniteGroup in the program is an actual group.
 */
class FiniteGroup {
 public:
  // table[x][y] is the index of x*y; names[x] labels element x.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names);

  int order() const { return n_; }

  int mul(int x, int y) const {
    check_element(x);
    check_element(y);
    return table_[static_cast<size_t>(x) * n_ + y];
  }

  int inverse(int x) const {
    check_element(x);
    return inverse_[x];
  }

  // Least k >= 1 with x^k = identity.
  int element_order(int x) const {
    check_element(x);
    return order_[x];
  }

  const std::string& element_name(int x) const {
    check_element(x);
    return names_[x];
  }

  const std::vector<std::string>& element_names() const { return names_; }

  // Index of the element with this name, or -1 when absent.
  int element_by_name(std::string_view name) const;

 private:
  FiniteGroup() = default;

  void check_element(int x) const {
    if (x < 0 || x >= n_) throw std::out_of_range("element index out of range");
  }

  int n_ = 0;
  std::vector<int> table_;  // row-major n x n
  std::vector<std::string> names_;
  std::vector<int> inverse_;
  std::vector<int> order_;
};

// Standard families. The argument of dihedral_group and dicyclic_group is
// the group order itself (so dihedral_group(8) has 8 elements and
// dicyclic_group(8) is the quaternion group).
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int order);
FiniteGroup symmetric_group(int letters);    // letters <= 5
FiniteGroup alternating_group(int letters);  // letters <= 5
FiniteGroup elementary_abelian_2(int rank);  // rank <= 8
FiniteGroup dicyclic_group(int order);       // order divisible by 4
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Closure of a nonempty generating set under multiplication (worklist).
Bitset subgroup_generated(const FiniteGroup& g, const Bitset& gens);

// True when the subset contains the identity and is closed under
// multiplication, i.e. is a subgroup.
bool is_subgroup_subset(const FiniteGroup& g, const Bitset& h);

// True iff the subgroup h is cyclic, i.e. some element of h has order |h|.
// Throws NotASubgroup when h misses the identity or is not closed.
bool is_cyclic_subset(const FiniteGroup& g, const Bitset& h);

bool pair_generates_cyclic(const FiniteGroup& g, int x, int y);

// { y : <x,y> is cyclic }. Contains <x>; not a subgroup in general.
Bitset cyclicizer_of(const FiniteGroup& g, int x);

// Intersection of cyclicizer_of over all elements. For a finite group this
// is a cyclic normal subgroup contained in the center.
Bitset cyclicizer_of_group(const FiniteGroup& g);

Bitset centralizer(const FiniteGroup& g, int x);
Bitset center(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_cyclic_group(const FiniteGroup& g);

// True when every non-identity element has order 2 (rank 0 included).
bool is_elementary_abelian_2(const FiniteGroup& g);

// (elements of order two, elements of order three)
std::pair<Bitset, Bitset> order_two_and_three_sets(const FiniteGroup& g);

// Multiset of element orders as ascending (order, count) pairs.
std::vector<std::pair<int, int>> order_profile(const FiniteGroup& g);

// Exact isomorphism test: backtracking over generator images, pruned by
// element order. Throws OrderBoundExceeded when either order exceeds 24.
bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace ncg
