#pragma once

#include <set>
#include <string>
#include <vector>

#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"

namespace strictcat {

namespace detail {

inline void prefix_cells(ValidationReport& r, const std::string& prefix,
                         int level_shift) {
  for (auto& v : r.violations) {
    v.level += level_shift;
    for (auto& c : v.cells) c = prefix + c;
  }
}

inline ValidationReport validate_impl(const FinCat& c,
                                      std::set<const FinCat*>& known_good) {
  ValidationReport report;
  const int n = c.level();
  if (n == 0 || known_good.count(&c)) return report;
  const auto count = c.object_count();

  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      auto sub = validate_impl(c.hom(x, y), known_good);
      prefix_cells(sub, c.object_name(x) + "/" + c.object_name(y) + "/", 1);
      report.append(sub);
    }
  }

  // Per triple: the composition table must be a strict functor out of the
  // product Hom(x,y) x Hom(y,z). Its compatibility with the hom
  // compositions is the interchange law.
  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      for (Index z = 0; z < count; ++z) {
        const auto& l = c.hom(x, y);
        const auto& r = c.hom(y, z);
        const auto& o = c.hom(x, z);
        const auto& t = c.composition(x, y, z);
        auto at = [&](int i, Index a, Index b) {
          return t.levels[i][a * r.cell_count(i) + b];
        };
        auto name = [&](int i, Index a, Index a_x, Index a_y) {
          return c.address(i + 1, c.cell_at(i + 1, a_x, a_y, a));
        };
        for (int i = 1; i < n; ++i) {
          for (Index a = 0; a < l.cell_count(i); ++a) {
            for (Index b = 0; b < r.cell_count(i); ++b) {
              const Index res = at(i, a, b);
              if (o.source(i, res) != at(i - 1, l.source(i, a), r.source(i, b)) ||
                  o.target(i, res) != at(i - 1, l.target(i, a), r.target(i, b))) {
                report.add("composition.faces", i + 1,
                           {name(i, a, x, y), name(i, b, y, z)});
              }
            }
          }
        }
        for (int i = 0; i + 1 < n; ++i) {
          for (Index a = 0; a < l.cell_count(i); ++a) {
            for (Index b = 0; b < r.cell_count(i); ++b) {
              if (at(i + 1, l.identity_cell(i, a), r.identity_cell(i, b)) !=
                  o.identity_cell(i, at(i, a, b))) {
                report.add("composition.identity", i + 2,
                           {name(i, a, x, y), name(i, b, y, z)});
              }
            }
          }
        }
        for (int i = 1; i < n; ++i) {
          for (int j = 0; j < i; ++j) {
            std::vector<std::pair<Index, Index>> right_pairs;
            for_each_composable(r, i, j, [&](Index b1, Index b2) {
              right_pairs.emplace_back(b1, b2);
            });
            for_each_composable(l, i, j, [&](Index a1, Index a2) {
              const Index a12 = l.compose(i, j, a1, a2);
              for (auto [b1, b2] : right_pairs) {
                const Index lhs = at(i, a12, r.compose(i, j, b1, b2));
                auto rhs = o.try_compose(i, j, at(i, a1, b1), at(i, a2, b2));
                if (!rhs || *rhs != lhs) {
                  report.add("interchange." + std::to_string(j + 1), i + 1,
                             {name(i, a1, x, y), name(i, b1, y, z),
                              name(i, a2, x, y), name(i, b2, y, z)});
                }
              }
            });
          }
        }
      }
    }
  }

  // Associativity of composition for every composable object quadruple.
  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      for (Index z = 0; z < count; ++z) {
        for (Index w = 0; w < count; ++w) {
          const auto& hxy = c.hom(x, y);
          const auto& hyz = c.hom(y, z);
          const auto& hzw = c.hom(z, w);
          const auto& hyw = c.hom(y, w);
          const auto& t_xyz = c.composition(x, y, z);
          const auto& t_xzw = c.composition(x, z, w);
          const auto& t_yzw = c.composition(y, z, w);
          const auto& t_xyw = c.composition(x, y, w);
          for (int i = 0; i < n; ++i) {
            for (Index a = 0; a < hxy.cell_count(i); ++a) {
              for (Index b = 0; b < hyz.cell_count(i); ++b) {
                const Index ab = t_xyz.levels[i][a * hyz.cell_count(i) + b];
                for (Index d = 0; d < hzw.cell_count(i); ++d) {
                  const Index lhs = t_xzw.levels[i][ab * hzw.cell_count(i) + d];
                  const Index bd = t_yzw.levels[i][b * hzw.cell_count(i) + d];
                  const Index rhs = t_xyw.levels[i][a * hyw.cell_count(i) + bd];
                  if (lhs != rhs) {
                    report.add("associativity", i + 1,
                               {c.address(i + 1, c.cell_at(i + 1, x, y, a)),
                                c.address(i + 1, c.cell_at(i + 1, y, z, b)),
                                c.address(i + 1, c.cell_at(i + 1, z, w, d))});
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  // Unit laws, including iterated identities 1^i of 1_x.
  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      const auto& h = c.hom(x, y);
      const auto& left_t = c.composition(x, x, y);
      const auto& right_t = c.composition(x, y, y);
      for (int i = 0; i < n; ++i) {
        const Index ex = c.hom(x, x).identity_at(0, c.identity(x), i);
        const Index ey = c.hom(y, y).identity_at(0, c.identity(y), i);
        const auto nh = h.cell_count(i);
        const auto nyy = c.hom(y, y).cell_count(i);
        for (Index a = 0; a < nh; ++a) {
          if (left_t.levels[i][ex * nh + a] != a) {
            report.add("unit.left", i + 1,
                       {c.address(i + 1, c.cell_at(i + 1, x, y, a))});
          }
          if (right_t.levels[i][a * nyy + ey] != a) {
            report.add("unit.right", i + 1,
                       {c.address(i + 1, c.cell_at(i + 1, x, y, a))});
          }
        }
      }
    }
  }

  if (report.ok()) known_good.insert(&c);
  return report;
}

}  // namespace detail

/// Lists every violated axiom instance: faces of composites, preservation of
/// identities, interchange, associativity and unit laws, recursively in all
/// hom-categories. Structural problems are rejected earlier, at construction.
inline ValidationReport validate_cat(const FinCat& c) {
  std::set<const FinCat*> known_good;
  return detail::validate_impl(c, known_good);
}

/// On K = Hom_{Hom(x,x)}(1_x, 1_x) the compositions *_0 and *_1 of C agree
/// and are commutative, at every level of K.
inline ValidationReport eckmann_hilton_check(const FinCat& c, Index x) {
  if (c.level() < 2) {
    throw PreconditionError("Eckmann-Hilton check needs level >= 2");
  }
  if (x >= c.object_count()) throw StructuralError("unknown object");
  ValidationReport report;
  const auto& u = c.hom(x, x);
  const Index e = c.identity(x);
  const auto& k = u.hom(e, e);
  for (int i = 0; i <= k.level(); ++i) {
    const int level = i + 2;
    auto lift = [&](Index cell) {
      return c.cell_at(level, x, x, u.cell_at(i + 1, e, e, cell));
    };
    for (Index a = 0; a < k.cell_count(i); ++a) {
      for (Index b = 0; b < k.cell_count(i); ++b) {
        const Index la = lift(a);
        const Index lb = lift(b);
        const auto ab0 = c.try_compose(level, 0, la, lb);
        const auto ab1 = c.try_compose(level, 1, la, lb);
        const auto ba0 = c.try_compose(level, 0, lb, la);
        const auto ba1 = c.try_compose(level, 1, lb, la);
        if (!ab0 || !ab1 || !ba0 || !ba1) {
          report.add("eckmann_hilton.composable", level,
                     {c.address(level, la), c.address(level, lb)});
          continue;
        }
        if (*ab0 != *ab1) {
          report.add("eckmann_hilton.laws_differ", level,
                     {c.address(level, la), c.address(level, lb)});
        }
        if (*ab0 != *ba0 || *ab1 != *ba1) {
          report.add("eckmann_hilton.not_commutative", level,
                     {c.address(level, la), c.address(level, lb)});
        }
      }
    }
  }
  if (!report.ok() && validate_cat(c).ok()) {
    // A validated category cannot fail here; flag the validator itself.
    report.add("eckmann_hilton.validator_inconsistent", 0, {c.object_name(x)});
  }
  return report;
}

}  // namespace strictcat
