#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strictcat/strictcat.hpp"

using namespace strictcat;

TEST(Truncation, ComponentsMatchUnionFind) {
  for (const auto& e : corpus::entries()) {
    if (!e.groupoid) continue;
    const auto c = e.build();
    std::set<std::set<std::string>> got;
    for (const auto& part : pi0(c)) got.insert({part.begin(), part.end()});
    EXPECT_EQ(got, oracle::components(*c)) << e.name;
    EXPECT_EQ(truncate(c, 0)->object_count(), got.size()) << e.name;
  }
}

TEST(Truncation, TopLevelIsIdentity) {
  for (const auto& e : corpus::entries()) {
    if (!e.groupoid) continue;
    const auto c = e.build();
    const auto t = truncation(c, c->level());
    EXPECT_TRUE(same_shape(*t.cat, *c)) << e.name;
    for (Index u = 0; u < c->cell_count(c->level()); ++u) EXPECT_EQ(t.representative[t.class_of[u]], u);
  }
}

TEST(Truncation, DeloopingCollapsesBelowTop) {
  for (std::size_t n : {2, 3, 4}) {
    const auto c = deloop2(bracket(cyclic_group(n)));
    EXPECT_EQ(oracle::shape(*truncate(c, 2)), (std::vector<std::size_t>{1, 1, 1}));
    EXPECT_EQ(oracle::shape(*truncate(c, 3)), (std::vector<std::size_t>{1, 1, 1, n}));
  }
}

TEST(Truncation, DiscreteDeloopingKeepsPi2) {
  const auto c = corpus::build("deloop2_discrete_z2");
  EXPECT_EQ(oracle::shape(*truncate(c, 2)), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(oracle::shape(*truncate(c, 1)), (std::vector<std::size_t>{1, 1}));
}

TEST(Truncation, ClassesAreNamedByLeastMember) {
  const auto c = chaotic({"b", "a", "c"}, 2);
  const auto t = truncate(c, 0);
  ASSERT_EQ(t->object_count(), 1u);
  EXPECT_EQ(t->object_name(0), "a");
  const auto two = coproduct(chaotic({"q", "p"}, 1), chaotic({"z", "m"}, 1)).cat;
  const auto t2 = truncate(two, 0);
  ASSERT_EQ(t2->object_count(), 2u);
  EXPECT_EQ(t2->object_name(0), "p");
  EXPECT_EQ(t2->object_name(1), "m");
}

TEST(Truncation, ClassMapIsSurjectiveAndRespectsFaces) {
  const auto c = corpus::build("fatten_z2");
  for (int k = 1; k <= 3; ++k) {
    const auto t = truncation(c, k);
    std::vector<bool> hit(t.cat->cell_count(k), false);
    for (Index u = 0; u < c->cell_count(k); ++u) hit[t.class_of[u]] = true;
    for (bool h : hit) EXPECT_TRUE(h);
    for (Index cls = 0; cls < t.cat->cell_count(k); ++cls) EXPECT_EQ(t.class_of[t.representative[cls]], cls);
  }
}

TEST(Truncation, IdempotentOnCorpus) {
  for (const auto& e : corpus::entries()) {
    if (!e.groupoid) continue;
    const auto c = e.build();
    for (int k = 0; k <= c->level(); ++k) {
      const auto t = truncate(c, k);
      EXPECT_TRUE(*truncate(t, k) == *t) << e.name << " k=" << k;
    }
  }
}

TEST(Truncation, OutOfRangeLevel) {
  EXPECT_THROW(truncate(terminal(2), 3), PreconditionError);
  EXPECT_THROW(truncate(terminal(2), -1), PreconditionError);
}

TEST(Truncation, NonSymmetricRelationIsRejected) {
  EXPECT_THROW(truncate(corpus::build("interval"), 0), TruncationError);
}
