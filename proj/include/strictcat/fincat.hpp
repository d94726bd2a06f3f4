#pragma once

// Tabulated strict n-categories in enriched form: a set of objects, a strict
// (n-1)-category Hom(x, y) for every ordered pair, identities, and for every
// triple (x, y, z) a composition functor Hom(x, y) x Hom(y, z) -> Hom(x, z)
// stored level by level as a dense table.
//
// Cells of C at level i are numbered by a flat index. Level 0 cells are the
// objects in declared order; level i >= 1 cells are the concatenation, over
// (x, y) in declared order, of the level i-1 cells of Hom(x, y). This is the
// lexicographic order on recursive addresses (x, y, inner...) with objects
// ordered by position.
//
// Compositions use diagrammatic order: compose(i, j, u, v) is defined when
// the j-target of u equals the j-source of v.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "strictcat/error.hpp"

namespace strictcat {

using Index = std::size_t;

/// One composition functor Hom(x,y) x Hom(y,z) -> Hom(x,z).
/// levels[i] holds, for i-cells (l, r) of the two factors, the resulting
/// i-cell of Hom(x,z) at position l * count_i(Hom(y,z)) + r.
struct CompositionTable {
  std::vector<std::vector<Index>> levels;

  bool operator==(const CompositionTable&) const = default;
};

/// Position of a cell of level >= 1: the pair of objects it lives between
/// and its flat index inside Hom(x, y).
struct CellLocation {
  Index x = 0;
  Index y = 0;
  Index inner = 0;
};

inline std::string join_address(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k != 0) out += '/';
    out += parts[k];
  }
  return out;
}

inline std::vector<std::string> split_address(std::string_view addr) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = addr.find('/', start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(addr.substr(start));
      break;
    }
    parts.emplace_back(addr.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

class FinCat {
  struct Tag {};

 public:
  using Ptr = std::shared_ptr<const FinCat>;

  /// A level-0 category, i.e. a finite set.
  static Ptr make_set(std::vector<std::string> objects) {
    return make(0, std::move(objects), {}, {}, {});
  }

  /// Builds a category after structural checks (sizes, ranges, levels).
  /// Axioms are not checked here; see validate_cat.
  static Ptr make(int level, std::vector<std::string> objects,
                  std::vector<Ptr> homs, std::vector<Index> identities,
                  std::vector<CompositionTable> compositions) {
    return std::make_shared<const FinCat>(Tag{}, level, std::move(objects),
                                          std::move(homs),
                                          std::move(identities),
                                          std::move(compositions));
  }

  FinCat(Tag, int level, std::vector<std::string> objects,
         std::vector<Ptr> homs, std::vector<Index> identities,
         std::vector<CompositionTable> compositions)
      : level_(level),
        objects_(std::move(objects)),
        homs_(std::move(homs)),
        identities_(std::move(identities)),
        compositions_(std::move(compositions)) {
    check_structure();
    derive();
  }

  int level() const noexcept { return level_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  std::span<const std::string> objects() const noexcept { return objects_; }
  const std::string& object_name(Index x) const { return objects_.at(x); }

  std::optional<Index> find_object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }

  Index object_index(std::string_view name) const {
    auto x = find_object(name);
    if (!x) throw StructuralError("unknown object '" + std::string(name) + "'");
    return *x;
  }

  const FinCat& hom(Index x, Index y) const { return *hom_ptr(x, y); }
  const Ptr& hom_ptr(Index x, Index y) const {
    require_positive_level("hom");
    return homs_.at(x * objects_.size() + y);
  }

  /// The object 1_x of Hom(x, x).
  Index identity(Index x) const {
    require_positive_level("identity");
    return identities_.at(x);
  }

  const CompositionTable& composition(Index x, Index y, Index z) const {
    require_positive_level("composition");
    const auto n = objects_.size();
    return compositions_.at((x * n + y) * n + z);
  }

  std::span<const Ptr> homs() const noexcept { return homs_; }
  std::span<const Index> identities() const noexcept { return identities_; }
  std::span<const CompositionTable> compositions() const noexcept {
    return compositions_;
  }

  std::size_t cell_count(int i) const {
    check_level(i);
    return counts_[i];
  }

  CellLocation locate(int i, Index cell) const {
    if (i < 1) throw StructuralError("objects have no location");
    check_cell(i, cell);
    const Index block = block_[i][cell];
    const auto n = objects_.size();
    return {block / n, block % n, cell - offsets_[i][block]};
  }

  Index cell_at(int i, Index x, Index y, Index inner) const {
    if (i < 1) throw StructuralError("cell_at needs level >= 1");
    return offsets_[i][x * objects_.size() + y] + inner;
  }

  /// The (i-1)-cell source of an i-cell.
  Index source(int i, Index cell) const {
    check_cell(i, cell);
    if (i == 0) throw StructuralError("objects have no source");
    return source_[i][cell];
  }

  Index target(int i, Index cell) const {
    check_cell(i, cell);
    if (i == 0) throw StructuralError("objects have no target");
    return target_[i][cell];
  }

  /// j-dimensional source of an i-cell, j <= i.
  Index source_at(int i, Index cell, int j) const {
    for (; i > j; --i) cell = source(i, cell);
    return cell;
  }

  Index target_at(int i, Index cell, int j) const {
    for (; i > j; --i) cell = target(i, cell);
    return cell;
  }

  /// The identity (i+1)-cell on an i-cell.
  Index identity_cell(int i, Index cell) const {
    check_cell(i, cell);
    if (i >= level_) throw StructuralError("top cells have no identity");
    return identity_cell_[i][cell];
  }

  /// Iterated identity: lifts an i-cell to level `to`.
  Index identity_at(int i, Index cell, int to) const {
    for (; i < to; ++i) cell = identity_cell(i, cell);
    return cell;
  }

  bool is_identity(int i, Index cell) const {
    return i > 0 && identity_cell(i - 1, source(i, cell)) == cell;
  }

  /// u *_j v for i-cells u, v; nullopt when they are not composable.
  std::optional<Index> try_compose(int i, int j, Index u, Index v) const {
    check_cell(i, u);
    check_cell(i, v);
    if (j < 0 || j >= i) return std::nullopt;
    const auto a = locate(i, u);
    const auto b = locate(i, v);
    if (j == 0) {
      if (a.y != b.x) return std::nullopt;
      const auto& right = hom(a.y, b.y);
      const auto& table = composition(a.x, a.y, b.y).levels[i - 1];
      return cell_at(i, a.x, b.y,
                     table[a.inner * right.cell_count(i - 1) + b.inner]);
    }
    if (a.x != b.x || a.y != b.y) return std::nullopt;
    auto inner = hom(a.x, a.y).try_compose(i - 1, j - 1, a.inner, b.inner);
    if (!inner) return std::nullopt;
    return cell_at(i, a.x, a.y, *inner);
  }

  Index compose(int i, int j, Index u, Index v) const {
    auto r = try_compose(i, j, u, v);
    if (!r) {
      throw ComposabilityError("cells " + address(i, u) + " and " +
                               address(i, v) + " are not composable along " +
                               std::to_string(j));
    }
    return *r;
  }

  std::vector<std::string> address_parts(int i, Index cell) const {
    check_cell(i, cell);
    if (i == 0) return {objects_[cell]};
    const auto loc = locate(i, cell);
    std::vector<std::string> parts{objects_[loc.x], objects_[loc.y]};
    auto rest = hom(loc.x, loc.y).address_parts(i - 1, loc.inner);
    parts.insert(parts.end(), rest.begin(), rest.end());
    return parts;
  }

  std::string address(int i, Index cell) const {
    return join_address(address_parts(i, cell));
  }

  std::optional<Index> find_cell(int i, std::span<const std::string> parts) const {
    if (i < 0 || i > level_) return std::nullopt;
    if (parts.size() != static_cast<std::size_t>(2 * i + 1)) return std::nullopt;
    auto x = find_object(parts[0]);
    if (!x) return std::nullopt;
    if (i == 0) return *x;
    auto y = find_object(parts[1]);
    if (!y) return std::nullopt;
    auto inner = hom(*x, *y).find_cell(i - 1, parts.subspan(2));
    if (!inner) return std::nullopt;
    return cell_at(i, *x, *y, *inner);
  }

  std::optional<Index> find_cell(int i, std::string_view addr) const {
    auto parts = split_address(addr);
    return find_cell(i, std::span<const std::string>(parts));
  }

  /// Cells of Hom(x,y) at level i-1, as flat i-cells of this category.
  std::pair<Index, Index> block(int i, Index x, Index y) const {
    const Index b = x * objects_.size() + y;
    return {offsets_[i][b], offsets_[i][b + 1]};
  }

  friend bool operator==(const FinCat& a, const FinCat& b) {
    if (&a == &b) return true;
    if (a.level_ != b.level_ || a.objects_ != b.objects_ ||
        a.identities_ != b.identities_ || a.compositions_ != b.compositions_)
      return false;
    for (std::size_t k = 0; k < a.homs_.size(); ++k) {
      if (!(*a.homs_[k] == *b.homs_[k])) return false;
    }
    return true;
  }

 private:
  void require_positive_level(const char* what) const {
    if (level_ == 0) {
      throw StructuralError(std::string(what) +
                            " is undefined on a level-0 category");
    }
  }

  void check_level(int i) const {
    if (i < 0 || i > level_) {
      throw StructuralError("cell level " + std::to_string(i) +
                            " out of range 0.." + std::to_string(level_));
    }
  }

  void check_cell(int i, Index cell) const {
    check_level(i);
    if (cell >= counts_[i]) {
      throw StructuralError("cell index " + std::to_string(cell) +
                            " out of range at level " + std::to_string(i));
    }
  }

  void check_structure() {
    if (level_ < 0) throw StructuralError("negative level");
    for (Index x = 0; x < objects_.size(); ++x) {
      const auto& name = objects_[x];
      if (name.empty()) throw StructuralError("empty object id");
      if (name.find_first_of("/|") != std::string::npos) {
        throw StructuralError("object id '" + name +
                              "' contains a reserved character");
      }
      if (!object_index_.emplace(name, x).second) {
        throw StructuralError("duplicate object id '" + name + "'");
      }
    }
    const auto n = objects_.size();
    if (level_ == 0) {
      if (!homs_.empty() || !identities_.empty() || !compositions_.empty())
        throw StructuralError("a level-0 category carries no hom data");
      return;
    }
    if (homs_.size() != n * n) throw StructuralError("hom count mismatch");
    for (Index k = 0; k < homs_.size(); ++k) {
      if (!homs_[k]) throw StructuralError("missing hom " + pair_name(k));
      if (homs_[k]->level() != level_ - 1) {
        throw StructuralError("hom " + pair_name(k) + " has level " +
                              std::to_string(homs_[k]->level()) +
                              ", expected " + std::to_string(level_ - 1));
      }
    }
    if (identities_.size() != n) throw StructuralError("identity count mismatch");
    for (Index x = 0; x < n; ++x) {
      if (identities_[x] >= hom(x, x).object_count()) {
        throw StructuralError("identity of '" + objects_[x] +
                              "' is not an object of its endomorphism hom");
      }
    }
    if (compositions_.size() != n * n * n)
      throw StructuralError("composition table count mismatch");
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        for (Index z = 0; z < n; ++z) {
          const auto& t = composition(x, y, z);
          const std::string where = objects_[x] + "|" + objects_[y] + "|" +
                                    objects_[z];
          if (t.levels.size() != static_cast<std::size_t>(level_)) {
            throw StructuralError("composition " + where +
                                  " has the wrong number of levels");
          }
          for (int i = 0; i < level_; ++i) {
            const auto expect =
                hom(x, y).cell_count(i) * hom(y, z).cell_count(i);
            if (t.levels[i].size() != expect) {
              throw StructuralError("composition " + where + " level " +
                                    std::to_string(i) + " is not total");
            }
            const auto bound = hom(x, z).cell_count(i);
            for (Index r : t.levels[i]) {
              if (r >= bound) {
                throw StructuralError("composition " + where + " level " +
                                      std::to_string(i) +
                                      " has a dangling result");
              }
            }
          }
        }
      }
    }
  }

  std::string pair_name(Index k) const {
    const auto n = objects_.size();
    return objects_[k / n] + "|" + objects_[k % n];
  }

  void derive() {
    const auto n = objects_.size();
    counts_.assign(level_ + 1, 0);
    counts_[0] = n;
    offsets_.assign(level_ + 1, {});
    block_.assign(level_ + 1, {});
    source_.assign(level_ + 1, {});
    target_.assign(level_ + 1, {});
    identity_cell_.assign(level_, {});
    for (int i = 1; i <= level_; ++i) {
      auto& off = offsets_[i];
      off.assign(n * n + 1, 0);
      for (Index b = 0; b < n * n; ++b) {
        off[b + 1] = off[b] + homs_[b]->cell_count(i - 1);
      }
      counts_[i] = off[n * n];
      auto& blk = block_[i];
      auto& src = source_[i];
      auto& tgt = target_[i];
      blk.resize(counts_[i]);
      src.resize(counts_[i]);
      tgt.resize(counts_[i]);
      for (Index b = 0; b < n * n; ++b) {
        const auto& h = *homs_[b];
        for (Index c = off[b]; c < off[b + 1]; ++c) {
          blk[c] = b;
          const Index inner = c - off[b];
          if (i == 1) {
            src[c] = b / n;
            tgt[c] = b % n;
          } else {
            src[c] = offsets_[i - 1][b] + h.source(i - 1, inner);
            tgt[c] = offsets_[i - 1][b] + h.target(i - 1, inner);
          }
        }
      }
    }
    for (int i = 0; i < level_; ++i) {
      auto& ids = identity_cell_[i];
      ids.resize(counts_[i]);
      for (Index c = 0; c < counts_[i]; ++c) {
        if (i == 0) {
          ids[c] = offsets_[1][c * n + c] + identities_[c];
        } else {
          const Index b = block_[i][c];
          const Index inner = c - offsets_[i][b];
          ids[c] = offsets_[i + 1][b] + homs_[b]->identity_cell(i - 1, inner);
        }
      }
    }
  }

  int level_;
  std::vector<std::string> objects_;
  std::unordered_map<std::string, Index> object_index_;
  std::vector<Ptr> homs_;
  std::vector<Index> identities_;
  std::vector<CompositionTable> compositions_;

  std::vector<std::size_t> counts_;
  std::vector<std::vector<Index>> offsets_;
  std::vector<std::vector<Index>> block_;
  std::vector<std::vector<Index>> source_;
  std::vector<std::vector<Index>> target_;
  std::vector<std::vector<Index>> identity_cell_;
};

/// One line of the flat view: an i-cell with its (i-1)-level faces.
struct CellEntry {
  std::string id;
  std::string source;
  std::string target;

  bool operator==(const CellEntry&) const = default;
};

/// All i-cells in deterministic (recursive address) order.
inline std::vector<CellEntry> cells(const FinCat& c, int i) {
  std::vector<CellEntry> out;
  const auto count = c.cell_count(i);
  out.reserve(count);
  for (Index k = 0; k < count; ++k) {
    CellEntry e{c.address(i, k), {}, {}};
    if (i > 0) {
      e.source = c.address(i - 1, c.source(i, k));
      e.target = c.address(i - 1, c.target(i, k));
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline FinCat::Ptr hom_cat(const FinCat& c, std::string_view x,
                           std::string_view y) {
  return c.hom_ptr(c.object_index(x), c.object_index(y));
}

/// Address-level composition; throws ComposabilityError when the
/// j-faces do not match and StructuralError on unknown ids.
inline std::string compose_cells(const FinCat& c, int i, int j,
                                 std::string_view u, std::string_view v) {
  if (i < 1 || i > c.level()) {
    throw StructuralError("cannot compose cells of level " + std::to_string(i));
  }
  if (j < 0 || j >= i) {
    throw ComposabilityError("composition index " + std::to_string(j) +
                             " must lie in 0.." + std::to_string(i - 1));
  }
  auto a = c.find_cell(i, u);
  auto b = c.find_cell(i, v);
  if (!a) throw StructuralError("unknown cell '" + std::string(u) + "'");
  if (!b) throw StructuralError("unknown cell '" + std::string(v) + "'");
  return c.address(i, c.compose(i, j, *a, *b));
}

}  // namespace strictcat
