#pragma once

// Brute-force reference computations used as test oracles. They only read
// cells, faces and the raw composition tables; none of them calls the
// validation, truncation or groupoid machinery under test.

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/fincat.hpp"

namespace oracle {

using strictcat::FinCat;
using strictcat::Index;

/// Connected components of the objects under the 1-cells, as sorted name sets.
inline std::set<std::set<std::string>> components(const FinCat& c) {
  std::vector<Index> parent(c.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (c.level() >= 1) {
    for (Index f = 0; f < c.cell_count(1); ++f) {
      const auto a = find(c.source(1, f));
      const auto b = find(c.target(1, f));
      parent[a] = b;
    }
  }
  std::map<Index, std::set<std::string>> groups;
  for (Index x = 0; x < c.object_count(); ++x) groups[find(x)].insert(c.object_name(x));
  std::set<std::set<std::string>> out;
  for (auto& [root, names] : groups) out.insert(names);
  return out;
}

/// Every 1-cell has a two-sided inverse under the level-1 composition.
inline bool strict_inverses_level1(const FinCat& c) {
  for (Index f = 0; f < c.cell_count(1); ++f) {
    bool found = false;
    for (Index g = 0; g < c.cell_count(1) && !found; ++g) {
      auto fg = c.try_compose(1, 0, f, g);
      auto gf = c.try_compose(1, 0, g, f);
      found = fg && gf && *fg == c.identity_cell(0, c.source(1, f)) &&
              *gf == c.identity_cell(0, c.target(1, f));
    }
    if (!found) return false;
  }
  return true;
}

inline bool associative(const std::vector<Index>& table, std::size_t n) {
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) return false;
  return true;
}

/// Maps f: Z/p -> Z/q (elements named by residues) preserving addition.
inline bool additive(const std::vector<Index>& f, std::size_t p, std::size_t q) {
  for (Index a = 0; a < p; ++a)
    for (Index b = 0; b < p; ++b)
      if (f[(a + b) % p] != (f[a] + f[b]) % q) return false;
  return true;
}

/// Number of cells per level, as a vector.
inline std::vector<std::size_t> shape(const FinCat& c) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= c.level(); ++i) out.push_back(c.cell_count(i));
  return out;
}

inline std::size_t group_order(const std::vector<std::size_t>& factors) {
  std::size_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

}  // namespace oracle
