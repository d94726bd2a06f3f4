#include <gtest/gtest.h>

#include <filesystem>

#include "strictcat/strictcat.hpp"

using namespace strictcat;
namespace fs = std::filesystem;

namespace {

const fs::path corpus_dir = STRICTCAT_CORPUS_DIR;

std::string expect_structural_error(const Json& doc) {
  try {
    parse_category(doc);
  } catch (const StructuralError& e) {
    return e.what();
  }
  ADD_FAILURE() << "document was accepted";
  return {};
}

}  // namespace

TEST(Serialize, TerminalRoundTripsBitExactly) {
  const auto text = dump(to_json(*terminal(2)));
  EXPECT_EQ(dump(to_json(*parse_category(parse_text(text)))), text);
}

TEST(Serialize, CorpusRoundTrips) {
  for (const auto& e : corpus::entries()) {
    const auto c = e.build();
    const auto doc = to_json(*c);
    const auto back = parse_category(doc);
    EXPECT_TRUE(*back == *c) << e.name;
    EXPECT_EQ(dump(to_json(*back)), dump(doc)) << e.name;
  }
}

TEST(Serialize, CorpusFilesMatchBuilders) {
  for (const auto& e : corpus::entries()) {
    const auto path = corpus_dir / (e.name + ".cat");
    ASSERT_TRUE(fs::exists(path)) << path;
    const auto c = load_category(path);
    EXPECT_TRUE(*c == *e.build()) << e.name;
  }
  for (const auto& m : corpus::monoid_objects()) {
    const auto path = corpus_dir / (m.name + ".mongpd");
    ASSERT_TRUE(fs::exists(path)) << path;
    EXPECT_TRUE(parse_mongpd(read_json_file(path)) == m.build()) << m.name;
  }
}

TEST(Serialize, DeloopZ2FixtureHasPi3Z2) {
  const auto c = load_category(corpus_dir / "deloop_z2.cat");
  EXPECT_TRUE(isomorphic(homotopy_group(c, 3, "*"), cyclic_group(2)));
}

TEST(Serialize, DanglingCellNamesItsPath) {
  auto doc = to_json(*terminal(1));
  doc["compositions"]["*|*|*"][0][0][2] = "ghost";
  const auto msg = expect_structural_error(doc);
  EXPECT_NE(msg.find("/compositions/*|*|*/0/0/2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("ghost"), std::string::npos);
}

TEST(Serialize, SchemaViolations) {
  const auto base = to_json(*corpus::build("chaotic_ab_2"));
  {
    auto doc = base;
    doc.erase("identities");
    EXPECT_NE(expect_structural_error(doc).find("identities"), std::string::npos);
  }
  {
    auto doc = base;
    doc["homs"]["a|b"]["level"] = 0;
    EXPECT_NE(expect_structural_error(doc).find("/homs/a|b"), std::string::npos);
  }
  {
    auto doc = base;
    doc["compositions"]["a|b|a"][0].erase(0);
    EXPECT_NE(expect_structural_error(doc).find("missing entry"), std::string::npos);
  }
  {
    auto doc = base;
    doc["colour"] = "red";
    EXPECT_NE(expect_structural_error(doc).find("unexpected key"), std::string::npos);
  }
  {
    auto doc = base;
    doc["objects"][1] = "a";
    EXPECT_NE(expect_structural_error(doc).find("duplicate"), std::string::npos);
  }
  EXPECT_THROW(parse_text("{ not json"), StructuralError);
}

TEST(Serialize, FunctorDocuments) {
  gen::Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto f = gen::random_functor(rng, 2 + k % 2);
    const auto g = parse_functor(to_json(f));
    EXPECT_TRUE(*g.source == *f.source);
    EXPECT_EQ(g.maps, f.maps);
  }
  Json doc;
  doc["source"] = to_json(*terminal(2));
  doc["target"] = to_json(*terminal(2));
  doc["maps"] = "identity";
  EXPECT_TRUE(parse_functor(doc) == identity_functor(terminal(2)));
  doc["target"] = to_json(*chaotic({"a", "b"}, 2));
  EXPECT_THROW(parse_functor(doc), StructuralError);
}

TEST(Serialize, FunctorSidesMayBePaths) {
  Json doc;
  doc["source"] = "deloop_z2.cat";
  doc["target"] = "deloop_z2.cat";
  doc["maps"] = "identity";
  const auto f = parse_functor(doc, corpus_dir);
  EXPECT_TRUE(is_equivalence(f, EquivalenceVariant::a).ok);
}

TEST(Serialize, BaseChangeDocument) {
  Json doc;
  doc["kind"] = "base-change";
  doc["category"] = to_json(*corpus::build("two_components"));
  doc["map"] = {{"s", "a"}, {"t", "c"}, {"u", "c"}};
  const auto in = parse_base_change(doc);
  EXPECT_EQ(in.names, (std::vector<std::string>{"s", "t", "u"}));
  EXPECT_EQ(in.map, (std::vector<Index>{0, 2, 2}));
  doc["map"]["v"] = "nowhere";
  EXPECT_THROW(parse_base_change(doc), StructuralError);
}

TEST(Serialize, ReportShape) {
  Certificate cert;
  cert.claims.push_back({"x", true, Mode::window, std::nullopt, "d"});
  cert.claims.push_back({"y", false, Mode::structural, std::string("w"), ""});
  const auto r = report("split", {{"r", 2}}, cert);
  EXPECT_EQ(r["command"], "split");
  EXPECT_EQ(r["claims"][0]["status"], "pass");
  EXPECT_EQ(r["claims"][0]["mode"], "window");
  EXPECT_FALSE(r["claims"][0].contains("witness"));
  EXPECT_EQ(r["claims"][1]["witness"], "w");
  EXPECT_EQ(r["version"], version);
}
