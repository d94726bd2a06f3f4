#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"
#include "strictcat/truncation.hpp"

namespace strictcat {

/// pi_i(C, x) as the endomorphisms of 1^{i-1}_x in tau_{<=i}(C), with the
/// flat i-cells of tau_{<=i}(C) that carry each element.
struct HomotopyData {
  Group group;
  std::vector<Index> cells;
};

namespace detail {

/// Builds the group from an already computed truncation t = tau_{<=i}(C).
/// Throws PreconditionError when some element has no inverse.
inline HomotopyData homotopy_from_truncation(const Truncation& t, int i,
                                             Index x) {
  const auto& c = *t.cat;
  if (i < 1 || i > c.level()) {
    throw PreconditionError("homotopy index " + std::to_string(i) +
                            " out of range");
  }
  const Index base = c.identity_at(0, x, i - 1);
  HomotopyData out;
  auto [lo, hi] = c.block(i, x, x);
  for (Index u = lo; u < hi; ++u) {
    if (c.source(i, u) == base && c.target(i, u) == base) out.cells.push_back(u);
  }
  const auto n = out.cells.size();
  auto position = [&](Index cell) -> Index {
    auto it = std::lower_bound(out.cells.begin(), out.cells.end(), cell);
    if (it == out.cells.end() || *it != cell) {
      throw StructuralError("endomorphisms of an iterated identity are not closed");
    }
    return static_cast<Index>(it - out.cells.begin());
  };
  FiniteMonoid m;
  for (Index u : out.cells) m.elements.push_back(c.address(i, u));
  m.table.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      m.table[a * n + b] = position(c.compose(i, i - 1, out.cells[a], out.cells[b]));
  m.unit = position(c.identity_cell(i - 1, base));
  auto g = as_group(m);
  if (!g) {
    throw PreconditionError("pi_" + std::to_string(i) + " at " +
                            c.object_name(x) +
                            " has a non-invertible element (not a groupoid)");
  }
  out.group = std::move(*g);
  return out;
}

/// The map pi_i(A, x) -> pi_i(B, F x) induced by F, as element indices.
inline std::vector<Index> induced_on_homotopy(const StrictFunctor& f, int i,
                                              const Truncation& ta,
                                              const HomotopyData& pa,
                                              const Truncation& tb,
                                              const HomotopyData& pb) {
  std::vector<Index> out;
  out.reserve(pa.cells.size());
  for (Index cell : pa.cells) {
    const Index image = tb.class_of[f(i, ta.representative[cell])];
    auto it = std::lower_bound(pb.cells.begin(), pb.cells.end(), image);
    if (it == pb.cells.end() || *it != image) {
      throw StructuralError("functor does not map loops at the basepoint to loops");
    }
    out.push_back(static_cast<Index>(it - pb.cells.begin()));
  }
  return out;
}

/// pi_0(F) between the object classes of the two truncations.
inline std::vector<Index> induced_on_components(const StrictFunctor& f,
                                                const Truncation& ta,
                                                const Truncation& tb) {
  std::vector<Index> out;
  for (Index cls = 0; cls < ta.cat->object_count(); ++cls) {
    out.push_back(tb.class_of[f(0, ta.representative[cls])]);
  }
  return out;
}

}  // namespace detail

}  // namespace strictcat
