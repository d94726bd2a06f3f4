#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"

namespace strictcat {

/// The category with no objects at the given level.
inline FinCat::Ptr empty_cat(int n) {
  if (n < 0) throw PreconditionError("level must be non-negative");
  return FinCat::make(n, {}, {}, {}, {});
}

/// Objects S, exactly one cell between any two parallel cells. For n > 1 the
/// homs are terminal. chaotic({s}, n) has the shape of terminal(n).
inline FinCat::Ptr chaotic(std::vector<std::string> objects, int n);

/// The final strict n-category: one object "*" with terminal homs.
inline FinCat::Ptr terminal(int n) {
  if (n < 0) throw PreconditionError("terminal(n) needs n >= 0");
  if (n == 0) return FinCat::make_set({"*"});
  return chaotic({"*"}, n);
}

inline FinCat::Ptr chaotic(std::vector<std::string> objects, int n) {
  if (objects.empty()) throw PreconditionError("chaotic groupoid on an empty set");
  if (n < 1) throw PreconditionError("chaotic groupoid needs level >= 1");
  const auto count = objects.size();
  auto point = terminal(n - 1);
  std::vector<FinCat::Ptr> homs(count * count, point);
  std::vector<Index> ids(count, 0);
  CompositionTable t;
  for (int i = 0; i < n; ++i) t.levels.push_back({0});
  std::vector<CompositionTable> comps(count * count * count, t);
  return FinCat::make(n, std::move(objects), std::move(homs), std::move(ids),
                      std::move(comps));
}

inline StrictFunctor to_terminal(const FinCat::Ptr& c) {
  return constant_functor(c, terminal(c->level()), 0);
}

/// Structural equality ignoring every id: same shape, tables and identities
/// under the positional bijection of cells.
inline bool same_shape(const FinCat& a, const FinCat& b) {
  if (&a == &b) return true;
  if (a.level() != b.level() || a.object_count() != b.object_count())
    return false;
  if (a.level() == 0) return true;
  if (!std::equal(a.identities().begin(), a.identities().end(),
                  b.identities().begin(), b.identities().end()))
    return false;
  if (!std::equal(a.compositions().begin(), a.compositions().end(),
                  b.compositions().begin(), b.compositions().end()))
    return false;
  for (std::size_t k = 0; k < a.homs().size(); ++k) {
    if (!same_shape(*a.homs()[k], *b.homs()[k])) return false;
  }
  return true;
}

/// Replaces the top-level object ids, keeping everything else.
inline FinCat::Ptr with_object_names(const FinCat& c,
                                     std::vector<std::string> names) {
  if (names.size() != c.object_count()) {
    throw StructuralError("renaming needs one id per object");
  }
  return FinCat::make(c.level(), std::move(names),
                      {c.homs().begin(), c.homs().end()},
                      {c.identities().begin(), c.identities().end()},
                      {c.compositions().begin(), c.compositions().end()});
}

// ---------------------------------------------------------------------------
// Products

/// C x C' together with the cell bijection Mor^i(C x C') = Mor^i(C) x
/// Mor^i(C') and the two projections.
class Product {
 public:
  FinCat::Ptr cat;
  FinCat::Ptr left;
  FinCat::Ptr right;

  Index pair(int i, Index l, Index r) const {
    return pair_to_cell_.at(i).at(l * right->cell_count(i) + r);
  }
  std::pair<Index, Index> split(int i, Index cell) const {
    return cell_to_pair_.at(i).at(cell);
  }

  StrictFunctor projection_left() const { return projection(true); }
  StrictFunctor projection_right() const { return projection(false); }

  /// <F, G>: X -> C x C'.
  StrictFunctor pairing(const StrictFunctor& f, const StrictFunctor& g) const {
    if (!(*f.target == *left) || !(*g.target == *right) ||
        !(*f.source == *g.source)) {
      throw StructuralError("pairing needs functors into the two factors");
    }
    StrictFunctor out{f.source, cat, {}};
    for (int i = 0; i <= cat->level(); ++i) {
      std::vector<Index> m(f.maps[i].size());
      for (Index k = 0; k < m.size(); ++k) m[k] = pair(i, f(i, k), g(i, k));
      out.maps.push_back(std::move(m));
    }
    return out;
  }

 private:
  friend class ProductBuilder;

  StrictFunctor projection(bool first) const {
    StrictFunctor out{cat, first ? left : right, {}};
    for (int i = 0; i <= cat->level(); ++i) {
      std::vector<Index> m(cat->cell_count(i));
      for (Index k = 0; k < m.size(); ++k) {
        auto [l, r] = split(i, k);
        m[k] = first ? l : r;
      }
      out.maps.push_back(std::move(m));
    }
    return out;
  }

  std::vector<std::vector<Index>> pair_to_cell_;
  std::vector<std::vector<std::pair<Index, Index>>> cell_to_pair_;
};

inline std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

class ProductBuilder {
 public:
  std::shared_ptr<const Product> build(const FinCat::Ptr& p,
                                       const FinCat::Ptr& q) {
    auto key = std::make_pair(p.get(), q.get());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (p->level() != q->level()) {
      throw StructuralError("product of categories of different levels");
    }
    auto out = std::make_shared<Product>();
    out->left = p;
    out->right = q;
    const int n = p->level();
    const auto np = p->object_count();
    const auto nq = q->object_count();
    std::vector<std::string> objects;
    for (Index a = 0; a < np; ++a)
      for (Index b = 0; b < nq; ++b)
        objects.push_back(pair_name(p->object_name(a), q->object_name(b)));
    const auto n_obj = objects.size();

    if (n == 0) {
      out->cat = FinCat::make_set(std::move(objects));
    } else {
      std::vector<std::shared_ptr<const Product>> homs(n_obj * n_obj);
      std::vector<FinCat::Ptr> hom_cats(n_obj * n_obj);
      for (Index x = 0; x < n_obj; ++x) {
        for (Index y = 0; y < n_obj; ++y) {
          auto h = build(p->hom_ptr(x / nq, y / nq), q->hom_ptr(x % nq, y % nq));
          homs[x * n_obj + y] = h;
          hom_cats[x * n_obj + y] = h->cat;
        }
      }
      std::vector<Index> ids(n_obj);
      for (Index x = 0; x < n_obj; ++x) {
        ids[x] = homs[x * n_obj + x]->pair(0, p->identity(x / nq),
                                           q->identity(x % nq));
      }
      std::vector<CompositionTable> comps(n_obj * n_obj * n_obj);
      for (Index x = 0; x < n_obj; ++x) {
        for (Index y = 0; y < n_obj; ++y) {
          for (Index z = 0; z < n_obj; ++z) {
            const auto& hxy = *homs[x * n_obj + y];
            const auto& hyz = *homs[y * n_obj + z];
            const auto& hxz = *homs[x * n_obj + z];
            const auto& tp = p->composition(x / nq, y / nq, z / nq);
            const auto& tq = q->composition(x % nq, y % nq, z % nq);
            auto& t = comps[(x * n_obj + y) * n_obj + z];
            t.levels.resize(n);
            for (int i = 0; i < n; ++i) {
              const auto nl = hxy.cat->cell_count(i);
              const auto nr = hyz.cat->cell_count(i);
              const auto pr = hyz.left->cell_count(i);
              const auto qr = hyz.right->cell_count(i);
              auto& lvl = t.levels[i];
              lvl.resize(nl * nr);
              for (Index l = 0; l < nl; ++l) {
                auto [la, lb] = hxy.split(i, l);
                for (Index r = 0; r < nr; ++r) {
                  auto [ra, rb] = hyz.split(i, r);
                  lvl[l * nr + r] = hxz.pair(i, tp.levels[i][la * pr + ra],
                                             tq.levels[i][lb * qr + rb]);
                }
              }
            }
          }
        }
      }
      out->cat = FinCat::make(n, std::move(objects), std::move(hom_cats),
                              std::move(ids), std::move(comps));
      fill_maps(*out, homs);
    }
    if (n == 0) fill_maps(*out, {});
    memo_.emplace(key, out);
    return out;
  }

 private:
  static void fill_maps(Product& out,
                        const std::vector<std::shared_ptr<const Product>>& homs) {
    const auto& c = *out.cat;
    const auto& p = *out.left;
    const auto& q = *out.right;
    const auto nq = q.object_count();
    out.pair_to_cell_.resize(c.level() + 1);
    out.cell_to_pair_.resize(c.level() + 1);
    for (int i = 0; i <= c.level(); ++i) {
      out.pair_to_cell_[i].assign(p.cell_count(i) * q.cell_count(i), 0);
      out.cell_to_pair_[i].resize(c.cell_count(i));
      for (Index k = 0; k < c.cell_count(i); ++k) {
        Index pc, qc;
        if (i == 0) {
          pc = k / nq;
          qc = k % nq;
        } else {
          const auto loc = c.locate(i, k);
          auto [a, b] = homs[loc.x * c.object_count() + loc.y]->split(i - 1, loc.inner);
          pc = p.cell_at(i, loc.x / nq, loc.y / nq, a);
          qc = q.cell_at(i, loc.x % nq, loc.y % nq, b);
        }
        out.cell_to_pair_[i][k] = {pc, qc};
        out.pair_to_cell_[i][pc * q.cell_count(i) + qc] = k;
      }
    }
  }

  std::map<std::pair<const FinCat*, const FinCat*>, std::shared_ptr<const Product>>
      memo_;
};

/// C x C': objects are pairs, homs are products of homs, compositions are
/// computed componentwise.
inline Product product(const FinCat::Ptr& c, const FinCat::Ptr& d) {
  ProductBuilder builder;
  return *builder.build(c, d);
}

/// F x G, acting componentwise between the two products.
inline StrictFunctor product(const StrictFunctor& f, const StrictFunctor& g) {
  const auto p = product(f.source, g.source);
  const auto q = product(f.target, g.target);
  return q.pairing(compose(f, p.projection_left()),
                   compose(g, p.projection_right()));
}

inline StrictFunctor diagonal(const FinCat::Ptr& c) {
  const auto id = identity_functor(c);
  return product(c, c).pairing(id, id);
}

// ---------------------------------------------------------------------------
// Coproducts

class Coproduct {
 public:
  FinCat::Ptr cat;
  FinCat::Ptr left;
  FinCat::Ptr right;

  StrictFunctor inclusion_left() const { return inclusion(*left, 0, left); }
  StrictFunctor inclusion_right() const {
    return inclusion(*right, left->object_count(), right);
  }

  /// [F, G]: C + C' -> X.
  StrictFunctor copairing(const StrictFunctor& f, const StrictFunctor& g) const {
    if (!(*f.source == *left) || !(*g.source == *right) ||
        !(*f.target == *g.target)) {
      throw StructuralError("copairing needs functors out of the two summands");
    }
    const auto& c = *cat;
    const auto nl = left->object_count();
    StrictFunctor out{cat, f.target, {}};
    for (int i = 0; i <= c.level(); ++i) {
      std::vector<Index> m(c.cell_count(i));
      for (Index k = 0; k < m.size(); ++k) {
        if (i == 0) {
          m[k] = k < nl ? f(0, k) : g(0, k - nl);
          continue;
        }
        const auto loc = c.locate(i, k);
        if (loc.x < nl) {
          m[k] = f(i, left->cell_at(i, loc.x, loc.y, loc.inner));
        } else {
          m[k] = g(i, right->cell_at(i, loc.x - nl, loc.y - nl, loc.inner));
        }
      }
      out.maps.push_back(std::move(m));
    }
    return out;
  }

 private:
  StrictFunctor inclusion(const FinCat& part, Index shift,
                          const FinCat::Ptr& ptr) const {
    StrictFunctor out{ptr, cat, {}};
    for (int i = 0; i <= part.level(); ++i) {
      std::vector<Index> m(part.cell_count(i));
      for (Index k = 0; k < m.size(); ++k) {
        if (i == 0) {
          m[k] = k + shift;
        } else {
          const auto loc = part.locate(i, k);
          m[k] = cat->cell_at(i, loc.x + shift, loc.y + shift, loc.inner);
        }
      }
      out.maps.push_back(std::move(m));
    }
    return out;
  }
};

/// Disjoint union; object ids of the two summands must be distinct.
inline Coproduct coproduct(const FinCat::Ptr& c, const FinCat::Ptr& d) {
  if (c->level() != d->level()) {
    throw StructuralError("coproduct of categories of different levels");
  }
  const int n = c->level();
  const auto nc = c->object_count();
  const auto nd = d->object_count();
  const auto total = nc + nd;
  std::vector<std::string> objects(c->objects().begin(), c->objects().end());
  objects.insert(objects.end(), d->objects().begin(), d->objects().end());
  Coproduct out;
  out.left = c;
  out.right = d;
  if (n == 0) {
    out.cat = FinCat::make_set(std::move(objects));
    return out;
  }
  auto none = empty_cat(n - 1);
  auto side = [&](Index x) { return x < nc ? 0 : 1; };
  auto local = [&](Index x) { return x < nc ? x : x - nc; };
  auto part = [&](Index x) -> const FinCat& { return x < nc ? *c : *d; };
  std::vector<FinCat::Ptr> homs(total * total, none);
  std::vector<Index> ids(total);
  std::vector<CompositionTable> comps(total * total * total);
  for (Index x = 0; x < total; ++x) {
    ids[x] = part(x).identity(local(x));
    for (Index y = 0; y < total; ++y) {
      if (side(x) == side(y)) homs[x * total + y] = part(x).hom_ptr(local(x), local(y));
    }
  }
  for (Index x = 0; x < total; ++x) {
    for (Index y = 0; y < total; ++y) {
      for (Index z = 0; z < total; ++z) {
        auto& t = comps[(x * total + y) * total + z];
        if (side(x) == side(y) && side(y) == side(z)) {
          t = part(x).composition(local(x), local(y), local(z));
        } else {
          t.levels.assign(n, {});
        }
      }
    }
  }
  out.cat = FinCat::make(n, std::move(objects), std::move(homs), std::move(ids),
                         std::move(comps));
  return out;
}

// ---------------------------------------------------------------------------
// Raising the level

namespace detail {

inline FinCat::Ptr raise_impl(const FinCat::Ptr& c,
                              std::map<const FinCat*, FinCat::Ptr>& memo) {
  if (auto it = memo.find(c.get()); it != memo.end()) return it->second;
  const int n = c->level();
  const auto count = c->object_count();
  std::vector<std::string> objects(c->objects().begin(), c->objects().end());
  FinCat::Ptr out;
  if (n == 0) {
    auto point = FinCat::make_set({"1"});
    auto none = empty_cat(0);
    std::vector<FinCat::Ptr> homs(count * count, none);
    std::vector<CompositionTable> comps(count * count * count);
    for (Index x = 0; x < count; ++x) {
      homs[x * count + x] = point;
      comps[(x * count + x) * count + x].levels = {{0}};
    }
    for (auto& t : comps) {
      if (t.levels.empty()) t.levels = {{}};
    }
    out = FinCat::make(1, std::move(objects), std::move(homs),
                       std::vector<Index>(count, 0), std::move(comps));
  } else {
    std::vector<FinCat::Ptr> homs;
    for (const auto& h : c->homs()) homs.push_back(raise_impl(h, memo));
    std::vector<CompositionTable> comps(c->compositions().begin(),
                                        c->compositions().end());
    // Top cells of a raised category are identities, indexed like the
    // cells one level down, so the new top table repeats the old one.
    for (auto& t : comps) t.levels.push_back(t.levels.back());
    out = FinCat::make(n + 1, std::move(objects), std::move(homs),
                       {c->identities().begin(), c->identities().end()},
                       std::move(comps));
  }
  memo.emplace(c.get(), out);
  return out;
}

}  // namespace detail

/// C regarded as a strict (n+1)-category whose (n+1)-cells are identities.
inline FinCat::Ptr raise(const FinCat::Ptr& c) {
  std::map<const FinCat*, FinCat::Ptr> memo;
  return detail::raise_impl(c, memo);
}

inline FinCat::Ptr raise(const FinCat::Ptr& c, int to_level) {
  auto out = c;
  while (out->level() < to_level) out = raise(out);
  return out;
}

/// raise(F): the same cell maps plus the induced map on identity top cells.
inline StrictFunctor raise(const StrictFunctor& f) {
  StrictFunctor out{raise(f.source), raise(f.target), f.maps};
  out.maps.push_back(f.maps.back());
  return out;
}

// ---------------------------------------------------------------------------
// Full subcategories

struct Subcategory {
  FinCat::Ptr cat;
  StrictFunctor inclusion;
};

/// The full subcategory on the given objects (in the given order).
inline Subcategory full_subcategory(const FinCat::Ptr& c,
                                    const std::vector<Index>& keep) {
  const int n = c->level();
  const auto k = keep.size();
  std::vector<std::string> objects;
  for (Index x : keep) objects.push_back(c->object_name(x));
  Subcategory out;
  if (n == 0) {
    out.cat = FinCat::make_set(std::move(objects));
  } else {
    std::vector<FinCat::Ptr> homs(k * k);
    std::vector<Index> ids(k);
    std::vector<CompositionTable> comps(k * k * k);
    for (Index a = 0; a < k; ++a) {
      ids[a] = c->identity(keep[a]);
      for (Index b = 0; b < k; ++b) {
        homs[a * k + b] = c->hom_ptr(keep[a], keep[b]);
        for (Index d = 0; d < k; ++d) {
          comps[(a * k + b) * k + d] = c->composition(keep[a], keep[b], keep[d]);
        }
      }
    }
    out.cat = FinCat::make(n, std::move(objects), std::move(homs),
                           std::move(ids), std::move(comps));
  }
  out.inclusion = StrictFunctor{out.cat, c, {}};
  for (int i = 0; i <= n; ++i) {
    std::vector<Index> m(out.cat->cell_count(i));
    for (Index cell = 0; cell < m.size(); ++cell) {
      if (i == 0) {
        m[cell] = keep[cell];
      } else {
        const auto loc = out.cat->locate(i, cell);
        m[cell] = c->cell_at(i, keep[loc.x], keep[loc.y], loc.inner);
      }
    }
    out.inclusion.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace strictcat
