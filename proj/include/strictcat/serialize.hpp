#pragma once

// JSON documents for categories, functors, monoid objects and reports.
//
// A category document mirrors the enriched structure:
//
//   { "level": n, "objects": [...],
//     "homs": { "x|y": <category document of level n-1>, ... },
//     "identities": { "x": <object id of Hom(x,x)>, ... },
//     "compositions": { "x|y|z": [ [[l, r, result], ...]   (level 0)
//                                  ...                     (level n-1) ] } }
//
// Level-0 documents carry only "level" and "objects". Cells inside a hom are
// named by their address relative to that hom.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"
#include "strictcat/monoidal.hpp"
#include "strictcat/report.hpp"

namespace strictcat {

using Json = nlohmann::ordered_json;

namespace detail {

class Reader {
 public:
  explicit Reader(std::string path) : path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("at " + (path_.empty() ? std::string("/") : path_) + ": " + what);
  }

  Reader at(const std::string& key) const { return Reader(path_ + "/" + key); }
  Reader at(std::size_t k) const { return at(std::to_string(k)); }

  const Json& member(const Json& obj, const std::string& key) const {
    if (!obj.is_object()) fail("expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail("missing key '" + key + "'");
    return *it;
  }

  void only_keys(const Json& obj, std::initializer_list<const char*> keys) const {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool known = false;
      for (const char* k : keys) known = known || it.key() == k;
      if (!known) fail("unexpected key '" + it.key() + "'");
    }
  }

  std::string string(const Json& v) const {
    if (!v.is_string()) fail("expected a string");
    return v.get<std::string>();
  }

  long integer(const Json& v) const {
    if (!v.is_number_integer()) fail("expected an integer");
    return v.get<long>();
  }

  const Json& array(const Json& v) const {
    if (!v.is_array()) fail("expected an array");
    return v;
  }

  const Json& object(const Json& v) const {
    if (!v.is_object()) fail("expected an object");
    return v;
  }

  /// A cell id of `c` at level i.
  Index cell(const FinCat& c, int i, const Json& v) const {
    const auto id = string(v);
    auto found = c.find_cell(i, id);
    if (!found) fail("unknown " + std::to_string(i) + "-cell '" + id + "'");
    return *found;
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline FinCat::Ptr parse_category(const Json& doc, const Reader& r) {
  r.object(doc);
  const long level = r.integer(r.member(doc, "level"));
  if (level < 0) r.at("level").fail("negative level");
  std::vector<std::string> objects;
  const auto& objs = r.array(r.member(doc, "objects"));
  for (std::size_t k = 0; k < objs.size(); ++k) objects.push_back(r.at("objects").at(k).string(objs[k]));
  if (level == 0) {
    r.only_keys(doc, {"level", "objects"});
    try {
      return FinCat::make_set(std::move(objects));
    } catch (const StructuralError& e) {
      r.at("objects").fail(e.what());
    }
  }
  r.only_keys(doc, {"level", "objects", "homs", "identities", "compositions"});
  const auto n = objects.size();
  {
    std::vector<std::string> sorted = objects;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      r.at("objects").fail("duplicate object id");
    for (const auto& o : objects)
      if (o.empty() || o.find_first_of("/|") != std::string::npos)
        r.at("objects").fail("invalid object id '" + o + "'");
  }

  const auto hr = r.at("homs");
  const auto& homs_doc = hr.object(r.member(doc, "homs"));
  if (homs_doc.size() != n * n) hr.fail("expected " + std::to_string(n * n) + " homs");
  std::vector<FinCat::Ptr> homs(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const auto key = objects[x] + "|" + objects[y];
      const auto sub = hr.at(key);
      homs[x * n + y] = parse_category(hr.member(homs_doc, key), sub);
      if (homs[x * n + y]->level() != level - 1) sub.at("level").fail("expected level " + std::to_string(level - 1));
    }
  }

  const auto ir = r.at("identities");
  const auto& ids_doc = ir.object(r.member(doc, "identities"));
  if (ids_doc.size() != n) ir.fail("expected " + std::to_string(n) + " identities");
  std::vector<Index> identities(n);
  for (Index x = 0; x < n; ++x) {
    const auto& hom = *homs[x * n + x];
    identities[x] = ir.at(objects[x]).cell(hom, 0, ir.member(ids_doc, objects[x]));
  }

  const auto cr = r.at("compositions");
  const auto& comps_doc = cr.object(r.member(doc, "compositions"));
  if (comps_doc.size() != n * n * n) cr.fail("expected " + std::to_string(n * n * n) + " composition tables");
  std::vector<CompositionTable> comps(n * n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        const auto key = objects[x] + "|" + objects[y] + "|" + objects[z];
        const auto tr = cr.at(key);
        const auto& table = tr.array(cr.member(comps_doc, key));
        if (table.size() != static_cast<std::size_t>(level))
          tr.fail("expected " + std::to_string(level) + " levels");
        const auto& left = *homs[x * n + y];
        const auto& right = *homs[y * n + z];
        const auto& out = *homs[x * n + z];
        auto& t = comps[(x * n + y) * n + z];
        t.levels.resize(level);
        for (int i = 0; i < level; ++i) {
          const auto lr = tr.at(static_cast<std::size_t>(i));
          const auto& entries = lr.array(table[i]);
          const auto nl = left.cell_count(i);
          const auto nr = right.cell_count(i);
          std::vector<Index> values(nl * nr);
          std::vector<bool> seen(nl * nr, false);
          for (std::size_t e = 0; e < entries.size(); ++e) {
            const auto er = lr.at(e);
            const auto& triple = er.array(entries[e]);
            if (triple.size() != 3) er.fail("expected [left, right, result]");
            const Index a = er.at(std::size_t{0}).cell(left, i, triple[0]);
            const Index b = er.at(std::size_t{1}).cell(right, i, triple[1]);
            const Index c = er.at(std::size_t{2}).cell(out, i, triple[2]);
            if (seen[a * nr + b]) er.fail("duplicate entry");
            seen[a * nr + b] = true;
            values[a * nr + b] = c;
          }
          for (Index k = 0; k < seen.size(); ++k) {
            if (!seen[k]) {
              lr.fail("missing entry for (" + left.address(i, k / nr) + ", " +
                      right.address(i, k % nr) + ")");
            }
          }
          t.levels[i] = std::move(values);
        }
      }
    }
  }
  try {
    return FinCat::make(static_cast<int>(level), std::move(objects), std::move(homs),
                        std::move(identities), std::move(comps));
  } catch (const StructuralError& e) {
    r.fail(e.what());
  }
}

}  // namespace detail

inline Json to_json(const FinCat& c) {
  Json doc;
  doc["level"] = c.level();
  doc["objects"] = Json::array();
  for (const auto& o : c.objects()) doc["objects"].push_back(o);
  if (c.level() == 0) return doc;
  const auto n = c.object_count();
  const auto name = [&](Index x) { return c.object_name(x); };
  Json homs = Json::object();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) homs[name(x) + "|" + name(y)] = to_json(c.hom(x, y));
  Json ids = Json::object();
  for (Index x = 0; x < n; ++x) ids[name(x)] = c.hom(x, x).object_name(c.identity(x));
  Json comps = Json::object();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        const auto& left = c.hom(x, y);
        const auto& right = c.hom(y, z);
        const auto& out = c.hom(x, z);
        const auto& t = c.composition(x, y, z);
        Json levels = Json::array();
        for (int i = 0; i < c.level(); ++i) {
          Json entries = Json::array();
          const auto nr = right.cell_count(i);
          for (Index a = 0; a < left.cell_count(i); ++a)
            for (Index b = 0; b < nr; ++b)
              entries.push_back({left.address(i, a), right.address(i, b),
                                 out.address(i, t.levels[i][a * nr + b])});
          levels.push_back(std::move(entries));
        }
        comps[name(x) + "|" + name(y) + "|" + name(z)] = std::move(levels);
      }
    }
  }
  doc["homs"] = std::move(homs);
  doc["identities"] = std::move(ids);
  doc["compositions"] = std::move(comps);
  return doc;
}

inline FinCat::Ptr parse_category(const Json& doc) {
  return detail::parse_category(doc, detail::Reader(""));
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

inline Json parse_text(const std::string& text, const std::string& origin = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw StructuralError(origin + ": " + e.what());
  }
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path.string());
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

inline FinCat::Ptr load_category(const std::filesystem::path& path) {
  return parse_category(read_json_file(path));
}

/// A functor document: {"source", "target", "maps"}, where source and target
/// are category documents or paths (relative to `base`), and maps holds one
/// object per level sending source cell ids to target cell ids. The string
/// "identity" in place of maps denotes the identity functor.
inline Json to_json(const StrictFunctor& f) {
  Json doc;
  doc["kind"] = "functor";
  doc["source"] = to_json(*f.source);
  doc["target"] = to_json(*f.target);
  Json maps = Json::array();
  for (int i = 0; i <= f.level(); ++i) {
    Json m = Json::object();
    for (Index cell = 0; cell < f.source->cell_count(i); ++cell)
      m[f.source->address(i, cell)] = f.target->address(i, f(i, cell));
    maps.push_back(std::move(m));
  }
  doc["maps"] = std::move(maps);
  return doc;
}

inline StrictFunctor parse_functor(const Json& doc, const std::filesystem::path& base = {}) {
  const detail::Reader r("");
  r.object(doc);
  r.only_keys(doc, {"kind", "source", "target", "maps"});
  if (doc.contains("kind") && r.at("kind").string(doc["kind"]) != "functor")
    r.at("kind").fail("expected \"functor\"");
  const auto side = [&](const char* key) {
    const auto& v = r.member(doc, key);
    if (v.is_string()) return load_category(base / v.get<std::string>());
    return detail::parse_category(v, r.at(key));
  };
  StrictFunctor f{side("source"), side("target"), {}};
  if (f.source->level() != f.target->level()) r.fail("source and target levels differ");
  const auto& maps = r.member(doc, "maps");
  if (maps.is_string() && maps.get<std::string>() == "identity") {
    if (!(*f.source == *f.target)) r.at("maps").fail("identity between different categories");
    return identity_functor(f.source);
  }
  const auto mr = r.at("maps");
  mr.array(maps);
  if (maps.size() != static_cast<std::size_t>(f.level() + 1))
    mr.fail("expected " + std::to_string(f.level() + 1) + " levels");
  for (int i = 0; i <= f.level(); ++i) {
    const auto lr = mr.at(static_cast<std::size_t>(i));
    const auto& m = lr.object(maps[i]);
    std::vector<Index> values(f.source->cell_count(i));
    std::vector<bool> seen(values.size(), false);
    for (auto it = m.begin(); it != m.end(); ++it) {
      const auto er = lr.at(it.key());
      const Index a = er.cell(*f.source, i, Json(it.key()));
      values[a] = er.cell(*f.target, i, it.value());
      seen[a] = true;
    }
    for (Index k = 0; k < seen.size(); ++k)
      if (!seen[k]) lr.fail("no image for '" + f.source->address(i, k) + "'");
    f.maps.push_back(std::move(values));
  }
  return f;
}

/// {"kind": "mongpd", "underlying", "unit", "sum": {"objects", "arrows"}},
/// sums given as [left, right, result] triples of ids.
inline Json to_json(const MonGpd& g) {
  const auto& u = *g.underlying;
  Json doc;
  doc["kind"] = "mongpd";
  doc["underlying"] = to_json(u);
  doc["unit"] = u.object_name(g.unit);
  Json objects = Json::array();
  for (Index a = 0; a < g.object_count(); ++a)
    for (Index b = 0; b < g.object_count(); ++b)
      objects.push_back({u.object_name(a), u.object_name(b), u.object_name(g.add_objects(a, b))});
  Json arrows = Json::array();
  for (Index a = 0; a < g.arrow_count(); ++a)
    for (Index b = 0; b < g.arrow_count(); ++b)
      arrows.push_back({u.address(1, a), u.address(1, b), u.address(1, g.add_arrows(a, b))});
  doc["sum"] = {{"objects", std::move(objects)}, {"arrows", std::move(arrows)}};
  return doc;
}

inline MonGpd parse_mongpd(const Json& doc) {
  const detail::Reader r("");
  r.object(doc);
  r.only_keys(doc, {"kind", "underlying", "unit", "sum"});
  if (r.at("kind").string(r.member(doc, "kind")) != "mongpd") r.at("kind").fail("expected \"mongpd\"");
  auto u = detail::parse_category(r.member(doc, "underlying"), r.at("underlying"));
  if (u->level() != 1) r.at("underlying").at("level").fail("expected level 1");
  const Index unit = r.at("unit").cell(*u, 0, r.member(doc, "unit"));
  const auto sr = r.at("sum");
  const auto& sum = r.member(doc, "sum");
  sr.only_keys(sr.object(sum), {"objects", "arrows"});
  const auto table = [&](const char* key, int i) {
    const auto tr = sr.at(key);
    const auto& entries = tr.array(sr.member(sum, key));
    const auto count = u->cell_count(i);
    std::vector<Index> values(count * count);
    std::vector<bool> seen(values.size(), false);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto er = tr.at(e);
      const auto& t = er.array(entries[e]);
      if (t.size() != 3) er.fail("expected [left, right, result]");
      const Index a = er.at(std::size_t{0}).cell(*u, i, t[0]);
      const Index b = er.at(std::size_t{1}).cell(*u, i, t[1]);
      if (seen[a * count + b]) er.fail("duplicate entry");
      seen[a * count + b] = true;
      values[a * count + b] = er.at(std::size_t{2}).cell(*u, i, t[2]);
    }
    for (Index k = 0; k < seen.size(); ++k)
      if (!seen[k]) tr.fail("sum is not total");
    return values;
  };
  auto objects = table("objects", 0);
  auto arrows = table("arrows", 1);
  return make_mongpd(u, std::move(objects), std::move(arrows), unit);
}

/// {"kind": "base-change", "category", "map": {"s": "x", ...}}: the set S in
/// declared order and the map S -> Ob(category).
struct BaseChangeInput {
  FinCat::Ptr category;
  std::vector<std::string> names;
  std::vector<Index> map;
};

inline BaseChangeInput parse_base_change(const Json& doc) {
  const detail::Reader r("");
  r.object(doc);
  r.only_keys(doc, {"kind", "category", "map"});
  if (r.at("kind").string(r.member(doc, "kind")) != "base-change")
    r.at("kind").fail("expected \"base-change\"");
  BaseChangeInput out;
  out.category = detail::parse_category(r.member(doc, "category"), r.at("category"));
  const auto mr = r.at("map");
  const auto& m = mr.object(r.member(doc, "map"));
  if (m.empty()) mr.fail("the map needs at least one element");
  for (auto it = m.begin(); it != m.end(); ++it) {
    out.names.push_back(it.key());
    out.map.push_back(mr.at(it.key()).cell(*out.category, 0, it.value()));
  }
  return out;
}

inline Json to_json(const Claim& c) {
  Json doc;
  doc["name"] = c.name;
  doc["status"] = c.pass ? "pass" : "fail";
  doc["mode"] = to_string(c.mode);
  if (c.witness) doc["witness"] = *c.witness;
  if (!c.detail.empty()) doc["detail"] = c.detail;
  return doc;
}

inline Json to_json(const Certificate& cert) {
  Json claims = Json::array();
  for (const auto& c : cert.claims) claims.push_back(to_json(c));
  return claims;
}

inline constexpr const char* version = "1.0.0";

inline Json report(const std::string& command, Json params, const Certificate& cert,
                   Json result = nullptr) {
  Json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["claims"] = to_json(cert);
  if (!result.is_null()) doc["result"] = std::move(result);
  doc["version"] = version;
  return doc;
}

}  // namespace strictcat
