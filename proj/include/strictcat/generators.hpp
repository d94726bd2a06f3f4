#pragma once

#include <random>
#include <string>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/constructions.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"
#include "strictcat/monoidal.hpp"

namespace strictcat::gen {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 2) == 1; }

/// The groups of order at most 4.
inline std::vector<Group> small_groups() {
  return {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          abelian_group({2, 2})};
}

/// Every homomorphism g -> k, by exhaustive search over maps.
inline std::vector<std::vector<Index>> homomorphisms(const Group& g, const Group& k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> f(g.size(), 0);
  auto rec = [&](auto&& self, Index a) -> void {
    if (a == g.size()) {
      if (is_homomorphism(g, k, f)) out.push_back(f);
      return;
    }
    for (Index b = 0; b < k.size(); ++b) {
      f[a] = b;
      self(self, a + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// A one-object n-groupoid whose only non-trivial homotopy group is G, in
/// degree i (1 <= i <= n <= 3).
inline FinCat::Ptr eilenberg_maclane(const Group& g, int i, int n) {
  const auto b = bracket(g);
  switch (i) {
    case 1: return raise(b.underlying, n);
    case 2: return raise(deloop1(b), n);
    default: return deloop2(b);
  }
}

/// The functor between Eilenberg-MacLane groupoids induced by phi: g -> k.
inline StrictFunctor eilenberg_maclane(const Group& g, const Group& k,
                                       const std::vector<Index>& phi, int i, int n) {
  const auto bg = bracket(g);
  const auto bk = bracket(k);
  switch (i) {
    case 1: {
      StrictFunctor f{bg.underlying, bk.underlying, {{0}, phi}};
      while (f.level() < n) f = raise(f);
      return f;
    }
    case 2: {
      StrictFunctor f{deloop1(bg), deloop1(bk), {{0}, {0}, phi}};
      while (f.level() < n) f = raise(f);
      return f;
    }
    default:
      return StrictFunctor{deloop2(bg), deloop2(bk), {{0}, {0}, {0}, phi}};
  }
}

inline std::vector<std::string> names(std::size_t count, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

/// Objects 0 and 1 with a single non-identity arrow 0 -> 1.
inline FinCat::Ptr interval() {
  return detail::one_category({"0", "1"}, {{"1"}, {"f"}, {}, {"1"}}, {0, 0},
                              [](Index, Index, Index, Index, Index) { return Index{0}; });
}

/// The functor chaotic(S) -> chaotic(T) with the given object map.
inline StrictFunctor chaotic_map(const FinCat::Ptr& s, const FinCat::Ptr& t,
                                 const std::vector<Index>& objects) {
  StrictFunctor out{s, t, {objects}};
  for (int i = 1; i <= s->level(); ++i) {
    std::vector<Index> m(s->cell_count(i));
    for (Index cell = 0; cell < m.size(); ++cell) {
      const auto loc = s->locate(i, cell);
      m[cell] = t->cell_at(i, objects[loc.x], objects[loc.y], loc.inner);
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

inline Group random_group(Rng& rng) {
  const auto gs = small_groups();
  return gs[pick(rng, gs.size())];
}

inline FinCat::Ptr random_em(Rng& rng, int n) {
  return eilenberg_maclane(random_group(rng), 1 + static_cast<int>(pick(rng, n)), n);
}

/// A finite n-groupoid with at most four objects and fibers of order <= 4:
/// chaotic pieces and Eilenberg-MacLane pieces, combined by products and
/// disjoint unions.
inline FinCat::Ptr random_groupoid(Rng& rng, int n) {
  switch (pick(rng, 5)) {
    case 0: return chaotic(names(1 + pick(rng, 3), "a"), n);
    case 1: return random_em(rng, n);
    case 2: return product(random_em(rng, n), chaotic(names(1 + pick(rng, 2), "s"), n)).cat;
    case 3: {
      auto left = with_object_names(*random_em(rng, n), {"x"});
      auto right = chaotic(names(1 + pick(rng, 2), "c"), n);
      return coproduct(left, right).cat;
    }
    default: {
      const auto g = random_group(rng);
      const auto k = g.size() <= 2 ? random_group(rng) : trivial_group();
      const auto kk = g.size() * k.size() <= 4 ? k : trivial_group();
      return product(eilenberg_maclane(g, 1 + static_cast<int>(pick(rng, n)), n),
                     eilenberg_maclane(kk, 1 + static_cast<int>(pick(rng, n)), n))
          .cat;
    }
  }
}

/// A valid n-category that is not a groupoid: non-invertible arrows or
/// non-group monoids somewhere in the tower, possibly combined with a
/// groupoid.
inline FinCat::Ptr random_mutant(Rng& rng, int n) {
  FinCat::Ptr core;
  const auto sat = saturating_monoid(2 + pick(rng, 2));
  switch (pick(rng, n == 3 ? 6 : 4)) {
    case 0: core = raise(interval(), n); break;
    case 1: core = raise(bracket(sat).underlying, n); break;
    case 2: core = raise(deloop1(discrete(sat)), n); break;
    case 3: core = raise(deloop1(bracket(sat)), n); break;
    case 4: core = deloop2(discrete(sat)); break;
    default: core = deloop2(bracket(sat)); break;
  }
  switch (pick(rng, 3)) {
    case 0: return core;
    case 1: return product(core, chaotic(names(1 + pick(rng, 2), "s"), n)).cat;
    default: {
      const auto named = with_object_names(*core, names(core->object_count(), "m"));
      return coproduct(named, random_em(rng, n)).cat;
    }
  }
}

/// A random homomorphism g -> k, biased towards isomorphisms when they exist.
inline std::vector<Index> random_hom(Rng& rng, const Group& g, const Group& k) {
  const auto all = homomorphisms(g, k);
  if (coin(rng)) {
    std::vector<std::vector<Index>> isos;
    for (const auto& f : all)
      if (is_bijection(f, k.size())) isos.push_back(f);
    if (!isos.empty()) return isos[pick(rng, isos.size())];
  }
  return all[pick(rng, all.size())];
}

/// A functor between finite n-groupoids of the shapes above.
inline StrictFunctor random_functor(Rng& rng, int n) {
  switch (pick(rng, 10)) {
    case 0: return identity_functor(random_groupoid(rng, n));
    case 1: {
      const auto g = random_group(rng);
      const auto k = coin(rng) ? g : random_group(rng);
      return eilenberg_maclane(g, k, random_hom(rng, g, k), 1 + static_cast<int>(pick(rng, n)), n);
    }
    case 2: return to_terminal(random_groupoid(rng, n));
    case 3: {
      const auto p = product(random_em(rng, n), chaotic(names(1 + pick(rng, 2), "s"), n));
      return coin(rng) ? p.projection_left() : p.projection_right();
    }
    case 4: {
      const auto left = with_object_names(*random_em(rng, n), {"x"});
      const auto c = coproduct(left, chaotic(names(1 + pick(rng, 2), "c"), n));
      return coin(rng) ? c.inclusion_left() : c.inclusion_right();
    }
    case 5: {
      const auto src = random_groupoid(rng, n);
      const auto tgt = random_groupoid(rng, n);
      return constant_functor(src, tgt, pick(rng, tgt->object_count()));
    }
    case 6: {
      const auto x = coin(rng) ? random_em(rng, n) : chaotic(names(1 + pick(rng, 2), "a"), n);
      return diagonal(x);
    }
    case 7: {
      const auto s = chaotic(names(1 + pick(rng, 4), "a"), n);
      const auto t = chaotic(names(1 + pick(rng, 3), "b"), n);
      std::vector<Index> objects(s->object_count());
      for (auto& o : objects) o = pick(rng, t->object_count());
      return chaotic_map(s, t, objects);
    }
    case 8: {
      const auto g = random_group(rng);
      const auto k = random_group(rng);
      const auto l = random_group(rng);
      const int i = 1 + static_cast<int>(pick(rng, n));
      return compose(eilenberg_maclane(k, l, random_hom(rng, k, l), i, n),
                     eilenberg_maclane(g, k, random_hom(rng, g, k), i, n));
    }
    default: {
      const auto g = cyclic_group(2);
      const auto k = coin(rng) ? cyclic_group(2) : trivial_group();
      const int i = 1 + static_cast<int>(pick(rng, n));
      const int j = 1 + static_cast<int>(pick(rng, n));
      return product(eilenberg_maclane(g, g, random_hom(rng, g, g), i, n),
                     eilenberg_maclane(k, k, random_hom(rng, k, k), j, n));
    }
  }
}

/// A composable chain F_0, F_1, ... (F_{j+1} after F_j) of the given length.
inline std::vector<StrictFunctor> random_chain(Rng& rng, int n, std::size_t length) {
  std::vector<StrictFunctor> out;
  const int i = 1 + static_cast<int>(pick(rng, n));
  std::vector<Group> groups{random_group(rng)};
  for (std::size_t k = 0; k < length; ++k) {
    groups.push_back(coin(rng) ? groups.back() : random_group(rng));
  }
  const bool fattened = coin(rng);
  for (std::size_t k = 0; k < length; ++k) {
    auto f = eilenberg_maclane(groups[k], groups[k + 1],
                               random_hom(rng, groups[k], groups[k + 1]), i, n);
    if (k == 0 && fattened) {
      const auto p = product(f.source, chaotic(names(2, "s"), n));
      f = compose(f, p.projection_left());
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace strictcat::gen
