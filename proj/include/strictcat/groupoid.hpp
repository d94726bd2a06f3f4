#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"
#include "strictcat/homotopy.hpp"
#include "strictcat/truncation.hpp"

namespace strictcat {

/// The offending datum behind a negative verdict. `path` lists the object
/// pairs descended through hom-categories ("x|y"); `cells` are addresses
/// relative to the innermost category reached.
struct Witness {
  std::string kind;
  int index = -1;
  std::vector<std::string> path;
  std::vector<std::string> cells;

  std::string describe() const {
    std::string out = kind;
    if (index >= 0) out += "[" + std::to_string(index) + "]";
    for (const auto& p : path) out += " in Hom(" + p + ")";
    if (!cells.empty()) {
      out += ":";
      for (const auto& c : cells) out += " " + c;
    }
    return out;
  }

  bool operator==(const Witness&) const = default;
};

enum class GroupoidVariant { v2, v3 };
enum class EquivalenceVariant { a, b, c };

inline std::string to_string(GroupoidVariant v) {
  return v == GroupoidVariant::v2 ? "v2" : "v3";
}

inline std::string to_string(EquivalenceVariant v) {
  switch (v) {
    case EquivalenceVariant::a: return "a";
    case EquivalenceVariant::b: return "b";
    default: return "c";
  }
}

struct GroupoidVerdict {
  bool ok = true;
  GroupoidVariant variant = GroupoidVariant::v3;
  std::optional<Witness> witness;
};

struct EquivalenceVerdict {
  bool ok = true;
  EquivalenceVariant variant = EquivalenceVariant::a;
  std::optional<Witness> witness;
};

/// c |-> f *_0 c as a functor Hom(y,z) -> Hom(x,z), for an object f of Hom(x,y).
inline StrictFunctor precompose_with(const FinCat::Ptr& c, Index x, Index y,
                                     Index f, Index z) {
  const auto& fxy = c->hom(x, y);
  const auto& t = c->composition(x, y, z);
  StrictFunctor out{c->hom_ptr(y, z), c->hom_ptr(x, z), {}};
  const auto& src = *out.source;
  for (int i = 0; i <= src.level(); ++i) {
    const Index fi = fxy.identity_at(0, f, i);
    std::vector<Index> m(src.cell_count(i));
    for (Index cell = 0; cell < m.size(); ++cell) {
      m[cell] = t.levels[i][fi * src.cell_count(i) + cell];
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

/// c |-> c *_0 f as a functor Hom(w,x) -> Hom(w,y), for an object f of Hom(x,y).
inline StrictFunctor postcompose_with(const FinCat::Ptr& c, Index w, Index x,
                                      Index y, Index f) {
  const auto& fxy = c->hom(x, y);
  const auto& t = c->composition(w, x, y);
  StrictFunctor out{c->hom_ptr(w, x), c->hom_ptr(w, y), {}};
  const auto& src = *out.source;
  for (int i = 0; i <= src.level(); ++i) {
    const Index fi = fxy.identity_at(0, f, i);
    std::vector<Index> m(src.cell_count(i));
    for (Index cell = 0; cell < m.size(); ++cell) {
      m[cell] = t.levels[i][cell * fxy.cell_count(i) + fi];
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

namespace detail {

inline std::string pair_key(const FinCat& c, Index x, Index y) {
  return c.object_name(x) + "|" + c.object_name(y);
}

inline Witness descend(Witness w, std::string key) {
  w.path.insert(w.path.begin(), std::move(key));
  return w;
}

// ---- variant (b) --------------------------------------------------------

inline std::optional<Witness> equivalence_b(const StrictFunctor& f) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (a.level() == 0) {
    if (!is_bijection(f.maps[0], b.object_count())) {
      std::vector<bool> hit(b.object_count(), false);
      for (Index x = 0; x < a.object_count(); ++x) {
        if (hit[f(0, x)]) return Witness{"object.collision", -1, {}, {a.object_name(x)}};
        hit[f(0, x)] = true;
      }
      for (Index y = 0; y < hit.size(); ++y) {
        if (!hit[y]) return Witness{"object.missed", -1, {}, {b.object_name(y)}};
      }
    }
    return std::nullopt;
  }
  const auto ta = truncation(f.source, 0);
  const auto tb = truncation(f.target, 0);
  std::vector<bool> hit(tb.cat->object_count(), false);
  for (Index x = 0; x < a.object_count(); ++x) hit[tb.class_of[f(0, x)]] = true;
  for (Index cls = 0; cls < hit.size(); ++cls) {
    if (!hit[cls]) {
      return Witness{"pi0.surjectivity", 0, {}, {tb.cat->object_name(cls)}};
    }
  }
  for (Index x = 0; x < a.object_count(); ++x) {
    for (Index y = 0; y < a.object_count(); ++y) {
      if (auto w = equivalence_b(hom_functor(f, x, y))) {
        return descend(*w, pair_key(a, x, y));
      }
    }
  }
  return std::nullopt;
}

// ---- variant (a) --------------------------------------------------------

inline std::optional<Witness> equivalence_a(const StrictFunctor& f) {
  const auto& a = *f.source;
  const auto ta0 = truncation(f.source, 0);
  const auto tb0 = truncation(f.target, 0);
  const auto on_pi0 = induced_on_components(f, ta0, tb0);
  if (!is_bijection(on_pi0, tb0.cat->object_count())) {
    std::vector<bool> hit(tb0.cat->object_count(), false);
    for (Index cls = 0; cls < on_pi0.size(); ++cls) {
      if (hit[on_pi0[cls]]) {
        return Witness{"pi0.injectivity", 0, {}, {ta0.cat->object_name(cls)}};
      }
      hit[on_pi0[cls]] = true;
    }
    for (Index cls = 0; cls < hit.size(); ++cls) {
      if (!hit[cls]) {
        return Witness{"pi0.surjectivity", 0, {}, {tb0.cat->object_name(cls)}};
      }
    }
  }
  for (int i = 1; i <= a.level(); ++i) {
    const auto ta = truncation(f.source, i);
    const auto tb = truncation(f.target, i);
    for (Index x = 0; x < a.object_count(); ++x) {
      const auto pa = homotopy_from_truncation(ta, i, x);
      const auto pb = homotopy_from_truncation(tb, i, f(0, x));
      const auto map = induced_on_homotopy(f, i, ta, pa, tb, pb);
      if (!is_bijection(map, pb.group.size()) ||
          !is_homomorphism(pa.group, pb.group, map)) {
        return Witness{"pi", i, {}, {a.object_name(x)}};
      }
    }
  }
  return std::nullopt;
}

// ---- variant (c) --------------------------------------------------------

/// Cells of one level bucketed by (source, target).
class FaceIndex {
 public:
  FaceIndex(const FinCat& c, int level) : level_(level) {
    if (level == 0) {
      auto& all = buckets_[0];
      for (Index x = 0; x < c.object_count(); ++x) all.push_back(x);
      return;
    }
    width_ = c.cell_count(level - 1);
    for (Index u = 0; u < c.cell_count(level); ++u) {
      buckets_[key(c.source(level, u), c.target(level, u))].push_back(u);
    }
  }

  /// Cells from s to t (ignored at level 0).
  const std::vector<Index>& between(Index s, Index t) const {
    static const std::vector<Index> none;
    auto it = buckets_.find(level_ == 0 ? 0 : key(s, t));
    return it == buckets_.end() ? none : it->second;
  }

  const std::unordered_map<std::uint64_t, std::vector<Index>>& buckets() const {
    return buckets_;
  }

 private:
  std::uint64_t key(Index s, Index t) const {
    return static_cast<std::uint64_t>(s) * width_ + t;
  }

  int level_;
  std::uint64_t width_ = 1;
  std::unordered_map<std::uint64_t, std::vector<Index>> buckets_;
};

inline std::optional<Witness> equivalence_c(const StrictFunctor& f) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  const int n = a.level();
  std::vector<FaceIndex> ia, ib;
  for (int l = 0; l <= n; ++l) {
    ia.emplace_back(a, l);
    ib.emplace_back(b, l);
  }
  // Is there an L-cell of B from p to q? Past the top, cells are equalities.
  auto joined_in_b = [&](int level, Index p, Index q) {
    if (level <= n) return !ib[level].between(p, q).empty();
    if (level == n + 1) return p == q;
    return true;
  };
  const Index none = static_cast<Index>(-1);
  auto name_a = [&](int level, Index cell) {
    return cell == none ? std::string("-") : a.address(level, cell);
  };
  auto name_b = [&](int level, Index cell) {
    return cell == none ? std::string("=") : b.address(level, cell);
  };

  for (int i = -1; i <= n; ++i) {
    std::vector<std::pair<Index, Index>> pairs;
    if (i == -1) {
      pairs.emplace_back(none, none);
    } else if (i == 0) {
      for (Index u = 0; u < a.object_count(); ++u)
        for (Index v = 0; v < a.object_count(); ++v) pairs.emplace_back(u, v);
    } else {
      for (Index u = 0; u < a.cell_count(i); ++u) {
        for (Index v : ia[i].between(a.source(i, u), a.target(i, u))) {
          pairs.emplace_back(u, v);
        }
      }
    }
    for (auto [u, v] : pairs) {
      const Index fu = u == none ? none : f(i, u);
      const Index fv = v == none ? none : f(i, v);
      std::vector<Index> rs;
      if (i + 1 <= n) {
        rs = ib[i + 1].between(fu, fv);
      } else if (fu == fv) {
        rs.push_back(none);  // the equality f(u) = f(v)
      }
      for (Index r : rs) {
        bool lifted = false;
        if (i + 1 <= n) {
          for (Index t : ia[i + 1].between(u, v)) {
            if (joined_in_b(i + 2, f(i + 1, t), r)) {
              lifted = true;
              break;
            }
          }
        } else {
          lifted = u == v;
        }
        if (!lifted) {
          return Witness{"lift", i, {},
                         {i >= 0 ? name_a(i, u) : "-", i >= 0 ? name_a(i, v) : "-",
                          i + 1 <= n ? name_b(i + 1, r) : "="}};
        }
      }
    }
  }
  return std::nullopt;
}

// ---- groupoid conditions ------------------------------------------------

using GroupoidMemo = std::map<const FinCat*, std::optional<Witness>>;

inline std::optional<Witness> groupoid_impl(const FinCat::Ptr& c,
                                            GroupoidVariant variant,
                                            GroupoidMemo& memo) {
  if (auto it = memo.find(c.get()); it != memo.end()) return it->second;
  std::optional<Witness> result;
  const auto count = c->object_count();
  if (c->level() > 0) {
    for (Index x = 0; x < count && !result; ++x) {
      for (Index y = 0; y < count && !result; ++y) {
        if (auto w = groupoid_impl(c->hom_ptr(x, y), variant, memo)) {
          result = descend(*w, pair_key(*c, x, y));
        }
      }
    }
  }
  if (!result && c->level() > 0 && variant == GroupoidVariant::v3) {
    try {
      const auto t = truncation(c, 1);
      const auto& tc = *t.cat;
      for (Index f = 0; f < tc.cell_count(1) && !result; ++f) {
        const Index x = tc.source(1, f);
        const Index y = tc.target(1, f);
        bool invertible = false;
        auto [lo, hi] = tc.block(1, y, x);
        for (Index g = lo; g < hi && !invertible; ++g) {
          invertible = tc.compose(1, 0, f, g) == tc.identity_cell(0, x) &&
                       tc.compose(1, 0, g, f) == tc.identity_cell(0, y);
        }
        if (!invertible) {
          result = Witness{"invertibility", 1, {},
                           {c->address(1, t.representative[f])}};
        }
      }
    } catch (const TruncationError& e) {
      result = Witness{"truncation", 1, {}, {e.what()}};
    }
  }
  if (!result && c->level() > 0 && variant == GroupoidVariant::v2) {
    for (Index f = 0; f < c->cell_count(1) && !result; ++f) {
      const auto loc = c->locate(1, f);
      const Index x = loc.x;
      const Index y = loc.y;
      for (Index z = 0; z < count && !result; ++z) {
        if (auto w = equivalence_b(precompose_with(c, x, y, loc.inner, z))) {
          result = Witness{"precomposition", 1, {},
                           {c->address(1, f), c->object_name(z), w->describe()}};
        }
      }
      for (Index w0 = 0; w0 < count && !result; ++w0) {
        if (auto w = equivalence_b(postcompose_with(c, w0, x, y, loc.inner))) {
          result = Witness{"postcomposition", 1, {},
                           {c->address(1, f), c->object_name(w0), w->describe()}};
        }
      }
    }
  }
  memo.emplace(c.get(), result);
  return result;
}

inline void require_groupoid(const FinCat::Ptr& c, const char* role) {
  GroupoidMemo memo;
  if (auto w = groupoid_impl(c, GroupoidVariant::v3, memo)) {
    throw PreconditionError(std::string(role) + " is not a groupoid: " +
                            w->describe());
  }
}

}  // namespace detail

/// Condition (2) (whiskering by every 1-cell is an equivalence) or condition
/// (3) (every arrow of tau_{<=1} is invertible), each with recursively
/// groupoidal hom-categories.
inline GroupoidVerdict is_groupoid(const FinCat::Ptr& c, GroupoidVariant variant) {
  detail::GroupoidMemo memo;
  auto w = detail::groupoid_impl(c, variant, memo);
  return {!w.has_value(), variant, std::move(w)};
}

inline EquivalenceVerdict is_equivalence(const StrictFunctor& f,
                                         EquivalenceVariant variant) {
  detail::check_functor_shape(f);
  detail::require_groupoid(f.source, "source");
  detail::require_groupoid(f.target, "target");
  std::optional<Witness> w;
  switch (variant) {
    case EquivalenceVariant::a: w = detail::equivalence_a(f); break;
    case EquivalenceVariant::b: w = detail::equivalence_b(f); break;
    case EquivalenceVariant::c: w = detail::equivalence_c(f); break;
  }
  return {!w.has_value(), variant, std::move(w)};
}

/// pi_i(C, x) for a groupoid C and 1 <= i <= level. Elements are named by
/// the addresses of their classes in tau_{<=i}(C).
inline HomotopyData homotopy_data(const FinCat::Ptr& c, int i, Index x) {
  if (x >= c->object_count()) throw StructuralError("unknown object");
  if (i < 1 || i > c->level()) {
    throw PreconditionError("homotopy index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(c->level()));
  }
  detail::require_groupoid(c, "category");
  return detail::homotopy_from_truncation(truncation(c, i), i, x);
}

inline Group homotopy_group(const FinCat::Ptr& c, int i, Index x) {
  return homotopy_data(c, i, x).group;
}

inline Group homotopy_group(const FinCat::Ptr& c, int i, std::string_view x) {
  return homotopy_group(c, i, c->object_index(x));
}

/// The isomorphism pi_i(C,x) -> pi_{i-1}(Hom(x,x), 1_x) sending the class of
/// a cell x/x/c to the class of c, checked to be a bijective homomorphism.
/// For i = 1 the right side is the set pi_0(Hom(x,x)) and only bijectivity is
/// checked. Returns the element map, or nullopt if it fails.
inline std::optional<std::vector<Index>> loop_isomorphism(const FinCat::Ptr& c,
                                                          int i, Index x) {
  const auto left = homotopy_data(c, i, x);
  const auto t = truncation(c, i);
  const auto& hxx = c->hom_ptr(x, x);
  const auto inner = truncation(hxx, i - 1);
  std::vector<Index> map;
  if (i == 1) {
    for (Index cell : left.cells) {
      map.push_back(inner.class_of[c->locate(1, t.representative[cell]).inner]);
    }
    if (!is_bijection(map, inner.cat->object_count())) return std::nullopt;
    return map;
  }
  const auto right = detail::homotopy_from_truncation(inner, i - 1, c->identity(x));
  for (Index cell : left.cells) {
    const Index cls =
        inner.class_of[c->locate(i, t.representative[cell]).inner];
    auto it = std::lower_bound(right.cells.begin(), right.cells.end(), cls);
    if (it == right.cells.end() || *it != cls) return std::nullopt;
    map.push_back(static_cast<Index>(it - right.cells.begin()));
  }
  if (!is_bijection(map, right.group.size()) ||
      !is_homomorphism(left.group, right.group, map)) {
    return std::nullopt;
  }
  return map;
}

/// Objects e of Hom(x,x) such that composing with e on either side is an
/// equivalence of hom-categories and e *_0 e is joined to e.
inline std::vector<std::string> weak_identity_candidates(const FinCat::Ptr& c,
                                                         Index x) {
  if (c->level() < 1) throw PreconditionError("weak identities need level >= 1");
  if (x >= c->object_count()) throw StructuralError("unknown object");
  const auto count = c->object_count();
  for (Index y = 0; y < count; ++y) {
    detail::require_groupoid(c->hom_ptr(x, y), "hom-category");
    detail::require_groupoid(c->hom_ptr(y, x), "hom-category");
  }
  const auto& hxx = c->hom(x, x);
  const auto classes = truncation(c->hom_ptr(x, x), 0);
  std::vector<std::string> out;
  for (Index e = 0; e < hxx.object_count(); ++e) {
    const Index ee = c->composition(x, x, x).levels[0][e * hxx.object_count() + e];
    if (classes.class_of[ee] != classes.class_of[e]) continue;
    bool ok = true;
    for (Index y = 0; y < count && ok; ++y) {
      ok = !detail::equivalence_a(precompose_with(c, x, x, e, y)) &&
           !detail::equivalence_a(postcompose_with(c, y, x, x, e));
    }
    if (ok) out.push_back(hxx.object_name(e));
  }
  return out;
}

inline std::vector<std::string> weak_identity_candidates(const FinCat::Ptr& c,
                                                         std::string_view x) {
  return weak_identity_candidates(c, c->object_index(x));
}

}  // namespace strictcat
