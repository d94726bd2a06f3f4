#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"

namespace strictcat {

/// A finite monoid given by its full multiplication table.
struct FiniteMonoid {
  std::vector<std::string> elements;
  std::vector<Index> table;  // table[a * size + b] = a.b
  Index unit = 0;

  std::size_t size() const noexcept { return elements.size(); }
  Index op(Index a, Index b) const { return table.at(a * size() + b); }

  Index find(const std::string& name) const {
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw StructuralError("unknown element '" + name + "'");
    return static_cast<Index>(it - elements.begin());
  }

  bool is_commutative() const {
    for (Index a = 0; a < size(); ++a)
      for (Index b = 0; b < size(); ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  bool operator==(const FiniteMonoid&) const = default;
};

/// Unit, associativity and closure of a monoid table; nullopt when all hold.
inline std::optional<std::string> monoid_law_violation(const FiniteMonoid& m) {
  const auto n = m.size();
  if (m.table.size() != n * n) return "table is not total";
  if (m.unit >= n) return "unit is not an element";
  for (Index v : m.table)
    if (v >= n) return "table leaves the carrier";
  for (Index a = 0; a < n; ++a) {
    if (m.op(m.unit, a) != a || m.op(a, m.unit) != a)
      return "unit law fails at " + m.elements[a];
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c)))
          return "associativity fails at (" + m.elements[a] + "," +
                 m.elements[b] + "," + m.elements[c] + ")";
  return std::nullopt;
}

struct Group : FiniteMonoid {
  std::vector<Index> inverses;

  Index inverse(Index a) const { return inverses.at(a); }

  bool is_abelian() const { return is_commutative(); }

  bool operator==(const Group&) const = default;
};

inline std::optional<std::string> group_law_violation(const Group& g) {
  if (auto bad = monoid_law_violation(g)) return bad;
  if (g.inverses.size() != g.size()) return "inverse map is not total";
  for (Index a = 0; a < g.size(); ++a) {
    const Index b = g.inverses[a];
    if (b >= g.size() || g.op(a, b) != g.unit || g.op(b, a) != g.unit)
      return "no inverse for " + g.elements[a];
  }
  return std::nullopt;
}

/// Turns a monoid into a group if every element is invertible.
inline std::optional<Group> as_group(const FiniteMonoid& m) {
  Group g;
  static_cast<FiniteMonoid&>(g) = m;
  g.inverses.assign(m.size(), 0);
  for (Index a = 0; a < m.size(); ++a) {
    bool found = false;
    for (Index b = 0; b < m.size() && !found; ++b) {
      if (m.op(a, b) == m.unit && m.op(b, a) == m.unit) {
        g.inverses[a] = b;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return g;
}

/// Z/n with elements named "0".."n-1".
inline Group cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  FiniteMonoid m;
  for (std::size_t k = 0; k < n; ++k) m.elements.push_back(std::to_string(k));
  m.table.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) m.table[a * n + b] = (a + b) % n;
  m.unit = 0;
  return *as_group(m);
}

inline Group trivial_group() { return cyclic_group(1); }

/// Componentwise product; elements named "(a,b)", ordered lexicographically.
inline Group direct_product(const Group& g, const Group& h) {
  Group out;
  const auto ng = g.size();
  const auto nh = h.size();
  for (Index a = 0; a < ng; ++a)
    for (Index b = 0; b < nh; ++b)
      out.elements.push_back("(" + g.elements[a] + "," + h.elements[b] + ")");
  const auto n = ng * nh;
  out.table.resize(n * n);
  out.inverses.resize(n);
  for (Index x = 0; x < n; ++x) {
    out.inverses[x] = g.inverse(x / nh) * nh + h.inverse(x % nh);
    for (Index y = 0; y < n; ++y) {
      out.table[x * n + y] = g.op(x / nh, y / nh) * nh + h.op(x % nh, y % nh);
    }
  }
  out.unit = g.unit * nh + h.unit;
  return out;
}

/// Z/f1 x Z/f2 x ...; a single factor gives plain cyclic names.
inline Group abelian_group(const std::vector<std::size_t>& factors) {
  if (factors.empty()) return trivial_group();
  Group out = cyclic_group(factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) {
    out = direct_product(out, cyclic_group(factors[k]));
  }
  return out;
}

/// {0, 1, ..., cap-1, inf} under addition saturating at inf.
inline FiniteMonoid saturating_monoid(std::size_t cap) {
  FiniteMonoid m;
  for (std::size_t k = 0; k < cap; ++k) m.elements.push_back(std::to_string(k));
  m.elements.push_back("inf");
  const auto n = cap + 1;
  m.table.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      m.table[a * n + b] = (a == cap || b == cap || a + b >= cap) ? cap : a + b;
  m.unit = 0;
  return m;
}

inline bool is_homomorphism(const FiniteMonoid& a, const FiniteMonoid& b,
                            const std::vector<Index>& f) {
  if (f.size() != a.size() || f[a.unit] != b.unit) return false;
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < a.size(); ++y)
      if (f[a.op(x, y)] != b.op(f[x], f[y])) return false;
  return true;
}

inline bool is_bijection(const std::vector<Index>& f, std::size_t target_size) {
  if (f.size() != target_size) return false;
  std::vector<bool> seen(target_size, false);
  for (Index v : f) {
    if (v >= target_size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace detail {

inline std::size_t element_order(const Group& g, Index a) {
  std::size_t k = 1;
  for (Index p = a; p != g.unit; p = g.op(p, a)) ++k;
  return k;
}

}  // namespace detail

/// Exhaustive search for an isomorphism g -> h. Backtracks over images of a
/// generating set, pruning by element order, and closes each candidate by
/// breadth-first extension.
inline std::optional<std::vector<Index>> find_isomorphism(const Group& g,
                                                          const Group& h) {
  if (g.size() != h.size()) return std::nullopt;
  const auto n = g.size();
  std::vector<Index> gens;
  {
    std::vector<bool> reached(n, false);
    reached[g.unit] = true;
    std::vector<Index> span{g.unit};
    for (Index a = 0; a < n; ++a) {
      if (reached[a]) continue;
      gens.push_back(a);
      // Close the subgroup generated so far.
      std::vector<Index> frontier = span;
      for (std::size_t k = 0; k < frontier.size(); ++k) {
        for (Index s : gens) {
          const Index p = g.op(frontier[k], s);
          if (!reached[p]) {
            reached[p] = true;
            frontier.push_back(p);
          }
        }
      }
      span = frontier;
    }
  }
  std::vector<std::size_t> g_order(n), h_order(n);
  for (Index a = 0; a < n; ++a) {
    g_order[a] = detail::element_order(g, a);
    h_order[a] = detail::element_order(h, a);
  }
  std::vector<Index> images(gens.size());
  auto extend = [&]() -> std::optional<std::vector<Index>> {
    std::vector<std::optional<Index>> f(n);
    f[g.unit] = h.unit;
    std::vector<Index> queue{g.unit};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Index a = queue[k];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Index b = g.op(a, gens[s]);
        const Index fb = h.op(*f[a], images[s]);
        if (!f[b]) {
          f[b] = fb;
          queue.push_back(b);
        } else if (*f[b] != fb) {
          return std::nullopt;
        }
      }
    }
    std::vector<Index> out(n);
    for (Index a = 0; a < n; ++a) {
      if (!f[a]) return std::nullopt;
      out[a] = *f[a];
    }
    if (!is_bijection(out, n) || !is_homomorphism(g, h, out)) return std::nullopt;
    return out;
  };
  std::optional<std::vector<Index>> found;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      found = extend();
      return found.has_value();
    }
    for (Index b = 0; b < n; ++b) {
      if (h_order[b] != g_order[gens[depth]]) continue;
      images[depth] = b;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

inline bool isomorphic(const Group& g, const Group& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace strictcat
