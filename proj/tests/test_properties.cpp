#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strictcat/strictcat.hpp"

using namespace strictcat;

class Seeded : public ::testing::TestWithParam<unsigned> {};

TEST_P(Seeded, GeneratedGroupoidsAreValidGroupoids) {
  gen::Rng rng(GetParam());
  for (int k = 0; k < 25; ++k) {
    const int n = 2 + k % 2;
    const auto c = gen::random_groupoid(rng, n);
    ASSERT_TRUE(validate_cat(*c).ok());
    EXPECT_LE(c->object_count(), 4u);
    EXPECT_TRUE(is_groupoid(c, GroupoidVariant::v3).ok);
    EXPECT_TRUE(is_groupoid(c, GroupoidVariant::v2).ok);
  }
}

TEST_P(Seeded, GeneratedMutantsAreValidNonGroupoids) {
  gen::Rng rng(GetParam());
  for (int k = 0; k < 25; ++k) {
    const auto c = gen::random_mutant(rng, 2 + k % 2);
    ASSERT_TRUE(validate_cat(*c).ok());
    EXPECT_FALSE(is_groupoid(c, GroupoidVariant::v3).ok);
    EXPECT_FALSE(is_groupoid(c, GroupoidVariant::v2).ok);
  }
}

TEST_P(Seeded, EquivalenceVariantsAgree) {
  gen::Rng rng(GetParam());
  for (int k = 0; k < 25; ++k) {
    const auto f = gen::random_functor(rng, 2 + k % 2);
    ASSERT_TRUE(validate_functor(f).ok());
    const bool a = is_equivalence(f, EquivalenceVariant::a).ok;
    EXPECT_EQ(is_equivalence(f, EquivalenceVariant::b).ok, a);
    EXPECT_EQ(is_equivalence(f, EquivalenceVariant::c).ok, a);
  }
}

TEST_P(Seeded, MiddleMapCancellation) {
  gen::Rng rng(GetParam());
  for (int k = 0; k < 15; ++k) {
    const auto ch = gen::random_chain(rng, 2 + k % 2, 3);
    const bool gf = is_equivalence(compose(ch[1], ch[0]), EquivalenceVariant::c).ok;
    const bool hg = is_equivalence(compose(ch[2], ch[1]), EquivalenceVariant::c).ok;
    if (gf && hg) {
      EXPECT_TRUE(is_equivalence(ch[1], EquivalenceVariant::c).ok);
    }
  }
}

TEST_P(Seeded, TruncationsOfGroupoidsAreGroupoids) {
  gen::Rng rng(GetParam());
  for (int k = 0; k < 10; ++k) {
    const auto c = gen::random_groupoid(rng, 3);
    for (int j = 0; j <= 3; ++j) {
      const auto t = truncate(c, j);
      EXPECT_TRUE(validate_cat(*t).ok());
      EXPECT_TRUE(is_groupoid(t, GroupoidVariant::v2).ok);
      EXPECT_EQ(oracle::components(*t).size(), oracle::components(*c).size());
    }
  }
}

TEST_P(Seeded, HomotopyOfProductsIsTheProduct) {
  gen::Rng rng(GetParam());
  for (int k = 0; k < 6; ++k) {
    const auto g = gen::random_group(rng);
    const auto h = g.size() <= 2 ? gen::random_group(rng) : trivial_group();
    const int i = 1 + static_cast<int>(gen::pick(rng, 3));
    const auto c = product(gen::eilenberg_maclane(g, i, 3), gen::eilenberg_maclane(h, i, 3)).cat;
    EXPECT_TRUE(isomorphic(homotopy_group(c, i, Index{0}), direct_product(g, h)));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Values(1u, 2u, 3u, 4u));
