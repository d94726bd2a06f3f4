#pragma once

#include <string>
#include <vector>

#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"

namespace strictcat {

/// A level-wise cell map between two categories of the same level.
/// maps[i][u] is the image of the i-cell u.
struct StrictFunctor {
  FinCat::Ptr source;
  FinCat::Ptr target;
  std::vector<std::vector<Index>> maps;

  int level() const { return source->level(); }
  Index operator()(int i, Index cell) const { return maps.at(i).at(cell); }
};

namespace detail {

/// Cells of `c` at level i bucketed by their j-source, j < i.
inline std::vector<std::vector<Index>> bucket_by_source(const FinCat& c, int i,
                                                        int j) {
  std::vector<std::vector<Index>> buckets(c.cell_count(j));
  for (Index u = 0; u < c.cell_count(i); ++u) {
    buckets[c.source_at(i, u, j)].push_back(u);
  }
  return buckets;
}

/// Calls fn(u, v) for every pair of i-cells composable along j.
template <typename Fn>
void for_each_composable(const FinCat& c, int i, int j, Fn&& fn) {
  const auto buckets = bucket_by_source(c, i, j);
  for (Index u = 0; u < c.cell_count(i); ++u) {
    for (Index v : buckets[c.target_at(i, u, j)]) fn(u, v);
  }
}

inline void check_functor_shape(const StrictFunctor& f) {
  if (!f.source || !f.target) throw StructuralError("functor without endpoints");
  const int n = f.source->level();
  if (f.target->level() != n) {
    throw StructuralError("functor endpoints have different levels");
  }
  if (f.maps.size() != static_cast<std::size_t>(n + 1)) {
    throw StructuralError("functor must carry one map per level 0.." +
                          std::to_string(n));
  }
  for (int i = 0; i <= n; ++i) {
    if (f.maps[i].size() != f.source->cell_count(i)) {
      throw StructuralError("functor map at level " + std::to_string(i) +
                            " is not total");
    }
    for (Index v : f.maps[i]) {
      if (v >= f.target->cell_count(i)) {
        throw StructuralError("functor map at level " + std::to_string(i) +
                              " has a dangling image");
      }
    }
  }
}

}  // namespace detail

/// Checks that F preserves sources, targets, identities and every *_j.
inline ValidationReport validate_functor(const StrictFunctor& f) {
  detail::check_functor_shape(f);
  ValidationReport report;
  const auto& a = *f.source;
  const auto& b = *f.target;
  const int n = a.level();
  for (int i = 1; i <= n; ++i) {
    for (Index u = 0; u < a.cell_count(i); ++u) {
      const Index fu = f(i, u);
      if (b.source(i, fu) != f(i - 1, a.source(i, u))) {
        report.add("functor.source", i, {a.address(i, u)});
      }
      if (b.target(i, fu) != f(i - 1, a.target(i, u))) {
        report.add("functor.target", i, {a.address(i, u)});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (Index u = 0; u < a.cell_count(i); ++u) {
      if (f(i + 1, a.identity_cell(i, u)) != b.identity_cell(i, f(i, u))) {
        report.add("functor.identity", i + 1, {a.address(i, u)});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) {
      detail::for_each_composable(a, i, j, [&](Index u, Index v) {
        const auto image = b.try_compose(i, j, f(i, u), f(i, v));
        if (!image || *image != f(i, a.compose(i, j, u, v))) {
          report.add("functor.composition." + std::to_string(j), i,
                     {a.address(i, u), a.address(i, v)});
        }
      });
    }
  }
  return report;
}

inline StrictFunctor identity_functor(const FinCat::Ptr& c) {
  StrictFunctor f{c, c, {}};
  for (int i = 0; i <= c->level(); ++i) {
    std::vector<Index> m(c->cell_count(i));
    for (Index k = 0; k < m.size(); ++k) m[k] = k;
    f.maps.push_back(std::move(m));
  }
  return f;
}

/// g after f.
inline StrictFunctor compose(const StrictFunctor& g, const StrictFunctor& f) {
  if (!(*f.target == *g.source)) {
    throw StructuralError("functors are not composable");
  }
  StrictFunctor out{f.source, g.target, {}};
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    std::vector<Index> m(f.maps[i].size());
    for (Index k = 0; k < m.size(); ++k) m[k] = g.maps[i][f.maps[i][k]];
    out.maps.push_back(std::move(m));
  }
  return out;
}

/// Constant functor onto an object d of the target: every i-cell goes to
/// the iterated identity 1^i_d.
inline StrictFunctor constant_functor(const FinCat::Ptr& source,
                                      const FinCat::Ptr& target, Index d) {
  if (source->level() != target->level()) {
    throw StructuralError("constant functor between different levels");
  }
  StrictFunctor f{source, target, {}};
  for (int i = 0; i <= source->level(); ++i) {
    f.maps.emplace_back(source->cell_count(i), target->identity_at(0, d, i));
  }
  return f;
}

/// The restriction F_{x,y}: Hom_A(x, y) -> Hom_B(F x, F y).
inline StrictFunctor hom_functor(const StrictFunctor& f, Index x, Index y) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (a.level() == 0) throw StructuralError("hom functor of a level-0 map");
  const Index fx = f(0, x);
  const Index fy = f(0, y);
  StrictFunctor out{a.hom_ptr(x, y), b.hom_ptr(fx, fy), {}};
  for (int i = 1; i <= a.level(); ++i) {
    auto [lo, hi] = a.block(i, x, y);
    std::vector<Index> m;
    m.reserve(hi - lo);
    for (Index c = lo; c < hi; ++c) {
      const auto loc = b.locate(i, f(i, c));
      if (loc.x != fx || loc.y != fy) {
        throw StructuralError("functor does not respect object faces at " +
                              a.address(i, c));
      }
      m.push_back(loc.inner);
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

inline bool operator==(const StrictFunctor& f, const StrictFunctor& g) {
  return *f.source == *g.source && *f.target == *g.target && f.maps == g.maps;
}

/// Strict full faithfulness: every hom functor is bijective on cells of every level.
inline bool is_fully_faithful(const StrictFunctor& f) {
  const auto& a = *f.source;
  if (a.level() < 1) throw PreconditionError("full faithfulness needs a category of level at least 1");
  for (Index x = 0; x < a.object_count(); ++x) {
    for (Index y = 0; y < a.object_count(); ++y) {
      const auto h = hom_functor(f, x, y);
      for (int i = 0; i < static_cast<int>(h.maps.size()); ++i) {
        const auto& m = h.maps[i];
        if (m.size() != h.target->cell_count(i)) return false;
        std::vector<bool> seen(m.size(), false);
        for (Index v : m) {
          if (seen[v]) return false;
          seen[v] = true;
        }
      }
    }
  }
  return true;
}

}  // namespace strictcat
