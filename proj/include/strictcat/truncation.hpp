#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"

namespace strictcat {

/// tau_{<=k}(C) together with the projection of k-cells onto their classes.
/// Cells below level k are shared with C and keep their flat indices.
struct Truncation {
  FinCat::Ptr cat;
  int level = 0;
  std::vector<Index> class_of;        // k-cells of C -> k-cells of cat
  std::vector<Index> representative;  // k-cells of cat -> some k-cell of C
};

namespace detail {

using TruncationMemo =
    std::map<std::pair<const FinCat*, int>, std::shared_ptr<const Truncation>>;

inline std::shared_ptr<const Truncation> truncate_impl(const FinCat::Ptr& c,
                                                       int k,
                                                       const std::string& path,
                                                       TruncationMemo& memo) {
  const auto key = std::make_pair(c.get(), k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int n = c->level();
  auto out = std::make_shared<Truncation>();
  out->level = k;
  const auto count = c->object_count();

  if (k == n) {
    out->cat = c;
    out->class_of.resize(c->cell_count(k));
    for (Index i = 0; i < out->class_of.size(); ++i) out->class_of[i] = i;
    out->representative = out->class_of;
  } else if (k == 0) {
    auto related = [&](Index x, Index y) {
      return c->hom(x, y).object_count() > 0;
    };
    for (Index x = 0; x < count; ++x) {
      for (Index y = 0; y < count; ++y) {
        if (related(x, y) && !related(y, x)) {
          throw TruncationError("joining relation is not symmetric at " + path +
                                c->object_name(x) + " -> " + path +
                                c->object_name(y));
        }
        for (Index z = 0; z < count; ++z) {
          if (related(x, y) && related(y, z) && !related(x, z)) {
            throw TruncationError("joining relation is not transitive at " +
                                  path + c->object_name(x) + ", " +
                                  c->object_name(y) + ", " + c->object_name(z));
          }
        }
      }
    }
    const Index unset = static_cast<Index>(-1);
    out->class_of.assign(count, unset);
    std::vector<std::string> names;
    for (Index x = 0; x < count; ++x) {
      if (out->class_of[x] != unset) continue;
      const Index cls = names.size();
      std::string least = c->object_name(x);
      for (Index y = x; y < count; ++y) {
        if (related(x, y)) {
          out->class_of[y] = cls;
          least = std::min(least, c->object_name(y));
        }
      }
      names.push_back(least);
      out->representative.push_back(x);
    }
    out->cat = FinCat::make_set(std::move(names));
  } else {
    std::vector<std::shared_ptr<const Truncation>> homs(count * count);
    std::vector<FinCat::Ptr> hom_cats(count * count);
    for (Index x = 0; x < count; ++x) {
      for (Index y = 0; y < count; ++y) {
        auto t = truncate_impl(c->hom_ptr(x, y), k - 1,
                               path + c->object_name(x) + "/" +
                                   c->object_name(y) + "/",
                               memo);
        homs[x * count + y] = t;
        hom_cats[x * count + y] = t->cat;
      }
    }
    std::vector<Index> ids(count);
    for (Index x = 0; x < count; ++x) {
      ids[x] = k == 1 ? homs[x * count + x]->class_of[c->identity(x)]
                      : c->identity(x);
    }
    const Index unset = static_cast<Index>(-1);
    std::vector<CompositionTable> comps(count * count * count);
    for (Index x = 0; x < count; ++x) {
      for (Index y = 0; y < count; ++y) {
        for (Index z = 0; z < count; ++z) {
          const auto& src = c->composition(x, y, z);
          auto& t = comps[(x * count + y) * count + z];
          t.levels.assign(src.levels.begin(), src.levels.begin() + (k - 1));
          const auto& l = *homs[x * count + y];
          const auto& r = *homs[y * count + z];
          const auto& o = *homs[x * count + z];
          const int top = k - 1;
          const auto nl = c->hom(x, y).cell_count(top);
          const auto nr = c->hom(y, z).cell_count(top);
          const auto ql = l.cat->cell_count(top);
          const auto qr = r.cat->cell_count(top);
          std::vector<Index> lvl(ql * qr, unset);
          for (Index a = 0; a < nl; ++a) {
            for (Index b = 0; b < nr; ++b) {
              const Index res = o.class_of[src.levels[top][a * nr + b]];
              Index& slot = lvl[l.class_of[a] * qr + r.class_of[b]];
              if (slot == unset) {
                slot = res;
              } else if (slot != res) {
                throw TruncationError(
                    "induced composition is not well defined at " + path +
                    c->object_name(x) + "|" + c->object_name(y) + "|" +
                    c->object_name(z) + " level " + std::to_string(top));
              }
            }
          }
          t.levels.push_back(std::move(lvl));
        }
      }
    }
    out->cat = FinCat::make(k, {c->objects().begin(), c->objects().end()},
                            std::move(hom_cats), std::move(ids),
                            std::move(comps));
    out->class_of.resize(c->cell_count(k));
    for (Index cell = 0; cell < out->class_of.size(); ++cell) {
      const auto loc = c->locate(k, cell);
      out->class_of[cell] = out->cat->cell_at(
          k, loc.x, loc.y, homs[loc.x * count + loc.y]->class_of[loc.inner]);
    }
    out->representative.resize(out->cat->cell_count(k));
    for (Index cell = 0; cell < out->representative.size(); ++cell) {
      const auto loc = out->cat->locate(k, cell);
      out->representative[cell] = c->cell_at(
          k, loc.x, loc.y,
          homs[loc.x * count + loc.y]->representative[loc.inner]);
    }
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace detail

/// Keeps i-cells for i < k and replaces k-cells by classes under "joined by
/// a (k+1)-cell". A class is named by its least member id. Throws
/// TruncationError when the relation is not an equivalence relation or the
/// induced composition is ill defined (possible outside groupoids).
inline Truncation truncation(const FinCat::Ptr& c, int k) {
  if (k < 0 || k > c->level()) {
    throw PreconditionError("truncation level " + std::to_string(k) +
                            " out of range 0.." + std::to_string(c->level()));
  }
  detail::TruncationMemo memo;
  return *detail::truncate_impl(c, k, "", memo);
}

inline FinCat::Ptr truncate(const FinCat::Ptr& c, int k) {
  return truncation(c, k).cat;
}

/// Connected components of the objects, in order of first member.
using Partition = std::vector<std::vector<std::string>>;

inline Partition pi0(const FinCat::Ptr& c) {
  const auto t = truncation(c, 0);
  Partition out(t.cat->object_count());
  for (Index x = 0; x < c->object_count(); ++x) {
    out[t.class_of[x]].push_back(c->object_name(x));
  }
  return out;
}

}  // namespace strictcat
