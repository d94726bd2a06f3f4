#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/constructions.hpp"
#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"
#include "strictcat/truncation.hpp"
#include "strictcat/validate.hpp"

namespace strictcat {

/// An abelian monoid object in 1-groupoids (or 1-categories): a level-1
/// category with a sum on objects and on arrows, given as flat tables.
struct MonGpd {
  FinCat::Ptr underlying;
  std::vector<Index> object_sum;  // [x * |Ob| + y]
  std::vector<Index> arrow_sum;   // [a * |Mor1| + b], flat 1-cell indices
  Index unit = 0;

  std::size_t object_count() const { return underlying->object_count(); }
  std::size_t arrow_count() const { return underlying->cell_count(1); }
  Index add_objects(Index x, Index y) const { return object_sum.at(x * object_count() + y); }
  Index add_arrows(Index a, Index b) const { return arrow_sum.at(a * arrow_count() + b); }

  /// The sum as a strict functor underlying x underlying -> underlying.
  StrictFunctor sum_functor() const {
    const auto p = product(underlying, underlying);
    StrictFunctor out{p.cat, underlying, {{}, {}}};
    for (int i = 0; i <= 1; ++i) {
      out.maps[i].resize(p.cat->cell_count(i));
      for (Index cell = 0; cell < out.maps[i].size(); ++cell) {
        auto [l, r] = p.split(i, cell);
        out.maps[i][cell] = i == 0 ? add_objects(l, r) : add_arrows(l, r);
      }
    }
    return out;
  }

  bool operator==(const MonGpd& o) const {
    return *underlying == *o.underlying && object_sum == o.object_sum &&
           arrow_sum == o.arrow_sum && unit == o.unit;
  }
};

/// Structural checks only: level, table sizes and ranges.
inline MonGpd make_mongpd(FinCat::Ptr underlying, std::vector<Index> object_sum,
                          std::vector<Index> arrow_sum, Index unit) {
  if (!underlying || underlying->level() != 1) {
    throw StructuralError("a monoid object needs a level-1 underlying category");
  }
  const auto no = underlying->object_count();
  const auto na = underlying->cell_count(1);
  if (object_sum.size() != no * no) throw StructuralError("object sum is not total");
  if (arrow_sum.size() != na * na) throw StructuralError("arrow sum is not total");
  for (Index v : object_sum)
    if (v >= no) throw StructuralError("object sum has a dangling result");
  for (Index v : arrow_sum)
    if (v >= na) throw StructuralError("arrow sum has a dangling result");
  if (unit >= no) throw StructuralError("unit is not an object");
  return MonGpd{std::move(underlying), std::move(object_sum), std::move(arrow_sum),
                unit};
}

/// Functoriality of the sum, associativity, commutativity and unit, over
/// full tables.
inline ValidationReport validate_monoidal(const MonGpd& g) {
  const auto& u = *g.underlying;
  if (!validate_cat(u).ok()) {
    throw PreconditionError("underlying category does not validate");
  }
  ValidationReport report;
  const auto no = g.object_count();
  const auto na = g.arrow_count();
  auto obj = [&](Index x) { return u.object_name(x); };
  auto arr = [&](Index a) { return u.address(1, a); };

  for (Index a = 0; a < na; ++a) {
    for (Index b = 0; b < na; ++b) {
      const Index s = g.add_arrows(a, b);
      if (u.source(1, s) != g.add_objects(u.source(1, a), u.source(1, b)) ||
          u.target(1, s) != g.add_objects(u.target(1, a), u.target(1, b))) {
        report.add("monoidal.sum.faces", 1, {arr(a), arr(b)});
      }
    }
  }
  for (Index x = 0; x < no; ++x) {
    for (Index y = 0; y < no; ++y) {
      if (g.add_arrows(u.identity_cell(0, x), u.identity_cell(0, y)) !=
          u.identity_cell(0, g.add_objects(x, y))) {
        report.add("monoidal.sum.identity", 1, {obj(x), obj(y)});
      }
    }
  }
  std::vector<std::pair<Index, Index>> composable;
  detail::for_each_composable(u, 1, 0, [&](Index a, Index b) { composable.emplace_back(a, b); });
  for (auto [a1, a2] : composable) {
    for (auto [b1, b2] : composable) {
      const Index lhs = g.add_arrows(u.compose(1, 0, a1, a2), u.compose(1, 0, b1, b2));
      auto rhs = u.try_compose(1, 0, g.add_arrows(a1, b1), g.add_arrows(a2, b2));
      if (!rhs || *rhs != lhs) {
        report.add("monoidal.sum.interchange", 1, {arr(a1), arr(a2), arr(b1), arr(b2)});
      }
    }
  }
  auto laws = [&](std::size_t size, auto add, Index unit, auto name, int level,
                  const std::string& tag) {
    for (Index a = 0; a < size; ++a) {
      if (add(unit, a) != a || add(a, unit) != a) {
        report.add("monoidal.unit" + tag, level, {name(a)});
      }
      for (Index b = 0; b < size; ++b) {
        if (add(a, b) != add(b, a)) {
          report.add("monoidal.commutativity" + tag, level, {name(a), name(b)});
        }
        for (Index c = 0; c < size; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) {
            report.add("monoidal.associativity" + tag, level,
                       {name(a), name(b), name(c)});
          }
        }
      }
    }
  };
  laws(no, [&](Index a, Index b) { return g.add_objects(a, b); }, g.unit, obj, 0,
       ".objects");
  laws(na, [&](Index a, Index b) { return g.add_arrows(a, b); },
       u.identity_cell(0, g.unit), arr, 1, ".arrows");
  return report;
}

namespace detail {

/// A level-1 category from arrow names per ordered pair, identity positions
/// and a composition rule on inner arrow indices.
inline FinCat::Ptr one_category(
    std::vector<std::string> objects,
    const std::vector<std::vector<std::string>>& arrows,
    const std::vector<Index>& identities,
    const std::function<Index(Index, Index, Index, Index, Index)>& compose) {
  const auto n = objects.size();
  std::vector<FinCat::Ptr> homs;
  for (const auto& names : arrows) homs.push_back(FinCat::make_set(names));
  std::vector<CompositionTable> comps(n * n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        const auto nl = arrows[x * n + y].size();
        const auto nr = arrows[y * n + z].size();
        std::vector<Index> lvl(nl * nr);
        for (Index a = 0; a < nl; ++a)
          for (Index b = 0; b < nr; ++b) lvl[a * nr + b] = compose(x, y, z, a, b);
        comps[(x * n + y) * n + z].levels = {std::move(lvl)};
      }
    }
  }
  return FinCat::make(1, std::move(objects), std::move(homs), identities,
                      std::move(comps));
}

}  // namespace detail

/// [M]: one object "0", arrows the elements of M, composition and sum both
/// the monoid operation.
inline MonGpd bracket(const FiniteMonoid& m) {
  if (!m.is_commutative()) throw PreconditionError("[M] needs a commutative M");
  auto u = detail::one_category(
      {"0"}, {m.elements}, {m.unit},
      [&](Index, Index, Index, Index a, Index b) { return m.op(a, b); });
  return make_mongpd(u, {0}, m.table, 0);
}

/// Objects the elements of M, identity arrows only (each named "1").
inline MonGpd discrete(const FiniteMonoid& m) {
  if (!m.is_commutative()) throw PreconditionError("discrete monoid object needs a commutative M");
  const auto n = m.size();
  std::vector<std::vector<std::string>> arrows(n * n);
  for (Index x = 0; x < n; ++x) arrows[x * n + x] = {"1"};
  auto u = detail::one_category(m.elements, arrows, std::vector<Index>(n, 0),
                                [](Index, Index, Index, Index, Index) { return Index{0}; });
  std::vector<Index> arrow_sum(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) arrow_sum[a * n + b] = m.op(a, b);
  return make_mongpd(u, m.table, std::move(arrow_sum), m.unit);
}

/// E(M): the chaotic groupoid on the elements of M with the sum of M.
inline MonGpd chaotic_monoidal(const FiniteMonoid& m) {
  if (!m.is_commutative()) throw PreconditionError("E(M) needs a commutative M");
  const auto n = m.size();
  auto u = chaotic(m.elements, 1);
  std::vector<Index> arrow_sum(n * n * n * n);
  for (Index a = 0; a < n * n; ++a) {
    for (Index b = 0; b < n * n; ++b) {
      const Index s = m.op(a / n, b / n);
      const Index t = m.op(a % n, b % n);
      arrow_sum[a * n * n + b] = s * n + t;
    }
  }
  return make_mongpd(u, m.table, std::move(arrow_sum), m.unit);
}

/// Componentwise sums on product(G.underlying, K.underlying).
inline MonGpd product(const MonGpd& g, const MonGpd& k) {
  const auto p = product(g.underlying, k.underlying);
  const auto& c = *p.cat;
  std::vector<Index> os(c.object_count() * c.object_count());
  std::vector<Index> as(c.cell_count(1) * c.cell_count(1));
  for (Index x = 0; x < c.object_count(); ++x) {
    auto [x1, x2] = p.split(0, x);
    for (Index y = 0; y < c.object_count(); ++y) {
      auto [y1, y2] = p.split(0, y);
      os[x * c.object_count() + y] =
          p.pair(0, g.add_objects(x1, y1), k.add_objects(x2, y2));
    }
  }
  for (Index a = 0; a < c.cell_count(1); ++a) {
    auto [a1, a2] = p.split(1, a);
    for (Index b = 0; b < c.cell_count(1); ++b) {
      auto [b1, b2] = p.split(1, b);
      as[a * c.cell_count(1) + b] = p.pair(1, g.add_arrows(a1, b1), k.add_arrows(a2, b2));
    }
  }
  return make_mongpd(p.cat, std::move(os), std::move(as), p.pair(0, g.unit, k.unit));
}

/// The monoid pi_0(G) of components with the induced sum.
inline FiniteMonoid pi0_monoid(const MonGpd& g) {
  const auto t = truncation(g.underlying, 0);
  FiniteMonoid m;
  const auto n = t.cat->object_count();
  m.elements.assign(t.cat->objects().begin(), t.cat->objects().end());
  m.table.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      m.table[a * n + b] =
          t.class_of[g.add_objects(t.representative[a], t.representative[b])];
  m.unit = t.class_of[g.unit];
  return m;
}

/// The one-object 2-category whose 1-cells are the objects of G and
/// 2-cells the arrows of G, composed along objects by the sum.
inline FinCat::Ptr deloop1(const MonGpd& g, const std::string& object = "*") {
  if (!validate_monoidal(g).ok()) {
    throw PreconditionError("deloop1 needs a valid monoid object");
  }
  CompositionTable t;
  t.levels = {g.object_sum, g.arrow_sum};
  return FinCat::make(2, {object}, {g.underlying}, {g.unit}, {t});
}

/// The one-object, one-arrow 3-category whose 2-cells are the objects of G
/// and 3-cells the arrows of G; *_0 and *_1 are both the sum.
inline FinCat::Ptr deloop2(const MonGpd& g, const std::string& object = "*",
                           const std::string& arrow = "1") {
  if (!validate_monoidal(g).ok()) {
    throw PreconditionError("deloop2 needs a valid monoid object");
  }
  CompositionTable inner;
  inner.levels = {g.object_sum, g.arrow_sum};
  auto u = FinCat::make(2, {arrow}, {g.underlying}, {g.unit}, {inner});
  CompositionTable outer;
  outer.levels = {{0}, g.object_sum, g.arrow_sum};
  return FinCat::make(3, {object}, {u}, {0}, {outer});
}

/// Hom_{Hom(x,x)}(1_x, 1_x) with the sum read off *_0. Requires one object
/// and one 1-cell, and that *_1 agrees with *_0.
inline MonGpd loop2(const FinCat::Ptr& c) {
  if (c->level() != 3) throw PreconditionError("loop2 needs a level-3 category");
  if (c->object_count() != 1) throw PreconditionError("loop2 needs exactly one object");
  const auto& u = c->hom(0, 0);
  if (u.object_count() != 1) throw PreconditionError("loop2 needs exactly one 1-cell");
  const auto& outer = c->composition(0, 0, 0);
  const auto& inner = u.composition(0, 0, 0);
  if (outer.levels[1] != inner.levels[0] || outer.levels[2] != inner.levels[1]) {
    throw PreconditionError("*_0 and *_1 differ on the loop monoid");
  }
  return make_mongpd(u.hom_ptr(0, 0), outer.levels[1], outer.levels[2],
                     u.identity(0));
}

/// The strict (n+1)-category with one object whose endomorphisms are C,
/// composed by *_0 of C. C must have one object and one 1-cell.
inline FinCat::Ptr deloop_once(const FinCat::Ptr& c, const std::string& object = "*") {
  const int n = c->level();
  if (n < 1 || n > 3) throw PreconditionError("deloop_once supports levels 1..3");
  if (c->object_count() != 1) throw PreconditionError("deloop_once needs exactly one object");
  if (c->cell_count(1) != 1) throw PreconditionError("deloop_once needs exactly one 1-cell");
  CompositionTable t;
  for (int i = 0; i <= n; ++i) {
    const auto k = c->cell_count(i);
    std::vector<Index> lvl(k * k);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b)
        lvl[a * k + b] = i == 0 ? 0 : c->compose(i, 0, a, b);
    t.levels.push_back(std::move(lvl));
  }
  return FinCat::make(n + 1, {object}, {c}, {0}, {t});
}

/// V = E(S) x_{E(Ob U)} U: objects S, Hom_V(s,t) = Hom_U(p s, p t).
inline FinCat::Ptr base_change(const FinCat::Ptr& u, std::vector<std::string> s,
                               const std::vector<Index>& p) {
  if (u->level() < 1) throw PreconditionError("base change needs level >= 1");
  if (p.size() != s.size()) throw StructuralError("base change map is not total");
  for (Index v : p)
    if (v >= u->object_count()) throw StructuralError("base change hits an unknown object");
  const auto k = s.size();
  std::vector<FinCat::Ptr> homs(k * k);
  std::vector<Index> ids(k);
  std::vector<CompositionTable> comps(k * k * k);
  for (Index a = 0; a < k; ++a) {
    ids[a] = u->identity(p[a]);
    for (Index b = 0; b < k; ++b) {
      homs[a * k + b] = u->hom_ptr(p[a], p[b]);
      for (Index d = 0; d < k; ++d) {
        comps[(a * k + b) * k + d] = u->composition(p[a], p[b], p[d]);
      }
    }
  }
  return FinCat::make(u->level(), std::move(s), std::move(homs), std::move(ids),
                      std::move(comps));
}

/// The projection V -> U of a base change.
inline StrictFunctor base_change_projection(const FinCat::Ptr& v,
                                            const FinCat::Ptr& u,
                                            const std::vector<Index>& p) {
  StrictFunctor out{v, u, {}};
  for (int i = 0; i <= v->level(); ++i) {
    std::vector<Index> m(v->cell_count(i));
    for (Index cell = 0; cell < m.size(); ++cell) {
      if (i == 0) {
        m[cell] = p[cell];
      } else {
        const auto loc = v->locate(i, cell);
        m[cell] = u->cell_at(i, p[loc.x], p[loc.y], loc.inner);
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

/// Base change of a monoid object along a monoid map p: S -> Ob(G).
inline MonGpd base_change(const MonGpd& g, const FiniteMonoid& s,
                          const std::vector<Index>& p) {
  if (p.size() != s.size()) throw StructuralError("base change map is not total");
  for (Index a = 0; a < s.size(); ++a) {
    if (p[a] >= g.object_count()) throw StructuralError("base change hits an unknown object");
  }
  if (p[s.unit] != g.unit) throw PreconditionError("base change map does not preserve the unit");
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b)
      if (p[s.op(a, b)] != g.add_objects(p[a], p[b]))
        throw PreconditionError("base change map is not additive at (" +
                                s.elements[a] + "," + s.elements[b] + ")");
  auto v = base_change(g.underlying, s.elements, p);
  const auto& u = *g.underlying;
  const auto na = v->cell_count(1);
  std::vector<Index> as(na * na);
  for (Index a = 0; a < na; ++a) {
    const auto la = v->locate(1, a);
    const Index ua = u.cell_at(1, p[la.x], p[la.y], la.inner);
    for (Index b = 0; b < na; ++b) {
      const auto lb = v->locate(1, b);
      const Index ub = u.cell_at(1, p[lb.x], p[lb.y], lb.inner);
      const Index sum = g.add_arrows(ua, ub);
      as[a * na + b] = v->cell_at(1, s.op(la.x, lb.x), s.op(la.y, lb.y),
                                  u.locate(1, sum).inner);
    }
  }
  return make_mongpd(v, s.table, std::move(as), s.unit);
}

/// C x E(S) at level 3, with its projection onto C.
inline Product fatten(const FinCat::Ptr& c, std::vector<std::string> s) {
  if (c->level() != 3) throw PreconditionError("fatten expects a level-3 category");
  return product(c, chaotic(std::move(s), 3));
}

/// deloop2 applied to a sum-preserving functor F: G -> K of underlying
/// categories.
inline StrictFunctor deloop2(const MonGpd& g, const MonGpd& k, const StrictFunctor& f) {
  if (f.maps.size() != 2) throw StructuralError("expected a level-1 functor");
  for (Index a = 0; a < g.object_count(); ++a)
    for (Index b = 0; b < g.object_count(); ++b)
      if (f(0, g.add_objects(a, b)) != k.add_objects(f(0, a), f(0, b)))
        throw PreconditionError("functor does not preserve the object sum");
  for (Index a = 0; a < g.arrow_count(); ++a)
    for (Index b = 0; b < g.arrow_count(); ++b)
      if (f(1, g.add_arrows(a, b)) != k.add_arrows(f(1, a), f(1, b)))
        throw PreconditionError("functor does not preserve the arrow sum");
  if (f(0, g.unit) != k.unit) throw PreconditionError("functor does not preserve the unit");
  return StrictFunctor{deloop2(g), deloop2(k), {{0}, {0}, f.maps[0], f.maps[1]}};
}

}  // namespace strictcat
