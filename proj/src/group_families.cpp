#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ncgraph/finite_group.hpp"

namespace ncg {

namespace {

std::string power_name(const std::string& base, int exp) {
  if (exp == 0) return "e";
  if (exp == 1) return base;
  return base + "^" + std::to_string(exp);
}

// Cycle notation over letters 1..k, fixed points dropped, "e" for the
// identity. p maps 0-based positions to 0-based images.
std::string cycle_name(const std::vector<int>& p) {
  const int k = static_cast<int>(p.size());
  std::vector<bool> done(k, false);
  std::string out;
  for (int s = 0; s < k; ++s) {
    if (done[s] || p[s] == s) continue;
    out += '(';
    int cur = s;
    do {
      done[cur] = true;
      out += static_cast<char>('1' + cur);
      cur = p[cur];
    } while (cur != s);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup permutation_group(int letters, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(letters));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even_permutation(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // Lexicographic enumeration starts at the identity, as required.
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> comp(static_cast<size_t>(letters));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < letters; ++i) comp[i] = perms[a][perms[b][i]];
      table[a][b] = index.at(comp);
    }

  std::vector<std::string> names;
  names.reserve(perms.size());
  for (const auto& q : perms) names.push_back(cycle_name(q));
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup dihedral_group(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("dihedral_group: order must be even and at least 2");
  const int n = order / 2;  // rotation count
  // Elements: r^i at i, s r^i at n + i, with s r^i s = r^-i.
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      table[a][b] = (a + b) % n;
      table[a][n + b] = n + (((b - a) % n) + n) % n;
      table[n + a][b] = n + (a + b) % n;
      table[n + a][n + b] = (((b - a) % n) + n) % n;
    }
  std::vector<std::string> names(order);
  for (int i = 0; i < n; ++i) {
    names[i] = power_name("r", i);
    names[n + i] = i == 0 ? "s" : (i == 1 ? "sr" : "sr^" + std::to_string(i));
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup symmetric_group(int letters) {
  if (letters < 1) throw std::invalid_argument("symmetric_group: need at least one letter");
  if (letters > 5) throw SizeLimitExceeded("symmetric_group supports at most 5 letters");
  return permutation_group(letters, false);
}

FiniteGroup alternating_group(int letters) {
  if (letters < 1) throw std::invalid_argument("alternating_group: need at least one letter");
  if (letters > 5) throw SizeLimitExceeded("alternating_group supports at most 5 letters");
  return permutation_group(letters, true);
}

FiniteGroup elementary_abelian_2(int rank) {
  if (rank < 0) throw std::invalid_argument("elementary_abelian_2: negative rank");
  if (rank > 8) throw SizeLimitExceeded("elementary_abelian_2 supports rank at most 8");
  const int n = 1 << rank;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = i ^ j;
    if (rank == 0) {
      names[i] = "e";
    } else {
      std::string bits(static_cast<size_t>(rank), '0');
      for (int b = 0; b < rank; ++b)
        if (i & (1 << (rank - 1 - b))) bits[b] = '1';
      names[i] = bits;
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup dicyclic_group(int order) {
  if (order < 4 || order % 4 != 0)
    throw std::invalid_argument("dicyclic_group: order must be a positive multiple of 4");
  const int half = order / 2;  // order of the generator a
  const int n = order / 4;     // b^2 = a^n
  // Elements: a^i at i, a^i b at half + i, with b a^i = a^-i b.
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  auto wrap = [half](int v) { return ((v % half) + half) % half; };
  for (int a = 0; a < half; ++a)
    for (int b = 0; b < half; ++b) {
      table[a][b] = wrap(a + b);
      table[a][half + b] = half + wrap(a + b);
      table[half + a][b] = half + wrap(a - b);
      table[half + a][half + b] = wrap(a - b + n);
    }
  std::vector<std::string> names(order);
  for (int i = 0; i < half; ++i) {
    names[i] = power_name("a", i);
    names[half + i] = i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int gn = g.order();
  const int hn = h.order();
  const int n = gn * hn;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < gn; ++a)
    for (int b = 0; b < hn; ++b) {
      const int idx = a * hn + b;
      names[idx] = "(" + g.element_name(a) + "," + h.element_name(b) + ")";
      for (int c = 0; c < gn; ++c)
        for (int d = 0; d < hn; ++d)
          table[idx][c * hn + d] = g.mul(a, c) * hn + h.mul(b, d);
    }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

}  // namespace ncg
