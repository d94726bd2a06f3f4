#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strictcat/strictcat.hpp"

using namespace strictcat;

namespace {

const EquivalenceVariant all_variants[] = {EquivalenceVariant::a, EquivalenceVariant::b,
                                           EquivalenceVariant::c};

struct Case {
  std::string label;
  StrictFunctor f;
  bool expected;
};

/// Functors whose equivalence status follows from the construction alone:
/// Eilenberg-MacLane maps are equivalences exactly when the group map is
/// bijective, chaotic groupoids are contractible, and so on.
std::vector<Case> recipe_cases() {
  std::vector<Case> out;
  const auto groups = gen::small_groups();
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (const auto& g : groups) {
        for (const auto& k : groups) {
          for (const auto& phi : gen::homomorphisms(g, k)) {
            out.push_back({"em", gen::eilenberg_maclane(g, k, phi, i, n), is_bijection(phi, k.size())});
          }
        }
        const auto em = gen::eilenberg_maclane(g, i, n);
        const bool trivial = g.size() == 1;
        const auto s = chaotic({"s0", "s1"}, n);
        const auto p = product(em, s);
        out.push_back({"terminal", to_terminal(em), trivial});
        out.push_back({"proj_left", p.projection_left(), true});
        out.push_back({"proj_right", p.projection_right(), trivial});
        out.push_back({"diagonal", diagonal(em), trivial});
        out.push_back({"constant", constant_functor(em, s, 1), trivial});
        const auto c = coproduct(with_object_names(*em, {"x"}), s);
        out.push_back({"inclusion", c.inclusion_right(), false});
      }
      const auto s3 = chaotic({"a", "b", "c"}, n);
      const auto s1 = chaotic({"z"}, n);
      out.push_back({"chaotic_map", gen::chaotic_map(s3, s1, {0, 0, 0}), true});
      out.push_back({"chaotic_map", gen::chaotic_map(s1, s3, {2}), true});
    }
  }
  return out;
}

}  // namespace

TEST(Groupoid, KnownFixtures) {
  for (const auto& e : corpus::entries()) {
    const auto c = e.build();
    EXPECT_EQ(is_groupoid(c, GroupoidVariant::v3).ok, e.groupoid) << e.name;
    EXPECT_EQ(is_groupoid(c, GroupoidVariant::v2).ok, e.groupoid) << e.name;
  }
}

TEST(Groupoid, LevelOneMatchesStrictInverses) {
  gen::Rng rng(17);
  std::vector<FinCat::Ptr> cats;
  for (int k = 0; k < 30; ++k) cats.push_back(truncate(gen::random_groupoid(rng, 2), 1));
  for (std::size_t cap = 2; cap <= 4; ++cap) cats.push_back(bracket(saturating_monoid(cap)).underlying);
  cats.push_back(gen::interval());
  cats.push_back(coproduct(gen::interval(), chaotic({"a", "b"}, 1)).cat);
  cats.push_back(product(gen::interval(), bracket(cyclic_group(3)).underlying).cat);
  for (const auto& c : cats) {
    const bool expect = oracle::strict_inverses_level1(*c);
    EXPECT_EQ(is_groupoid(c, GroupoidVariant::v3).ok, expect);
    EXPECT_EQ(is_groupoid(c, GroupoidVariant::v2).ok, expect);
  }
}

TEST(Groupoid, NonGroupoidComesWithWitness) {
  const auto v = is_groupoid(corpus::build("monoid_n3"), GroupoidVariant::v3);
  ASSERT_FALSE(v.ok);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_FALSE(v.witness->describe().empty());
  const auto deep = is_groupoid(corpus::build("deloop2_discrete_sat2"), GroupoidVariant::v3);
  ASSERT_FALSE(deep.ok);
  EXPECT_FALSE(deep.witness->path.empty());
}

TEST(Equivalence, RecipeOracle) {
  const auto cases = recipe_cases();
  ASSERT_GT(cases.size(), 200u);
  for (const auto& c : cases) {
    ASSERT_TRUE(validate_functor(c.f).ok()) << c.label;
    for (auto v : all_variants) {
      EXPECT_EQ(is_equivalence(c.f, v).ok, c.expected) << c.label << " variant " << to_string(v);
    }
  }
}

TEST(Equivalence, IdentityIsAnEquivalence) {
  for (const auto& e : corpus::entries()) {
    if (!e.groupoid) continue;
    const auto id = identity_functor(e.build());
    for (auto v : all_variants) EXPECT_TRUE(is_equivalence(id, v).ok) << e.name;
  }
}

TEST(Equivalence, FailureNamesAWitness) {
  const auto f = to_terminal(corpus::build("deloop_z2"));
  for (auto v : all_variants) {
    const auto verdict = is_equivalence(f, v);
    ASSERT_FALSE(verdict.ok);
    ASSERT_TRUE(verdict.witness.has_value());
  }
}

TEST(Equivalence, NonGroupoidEndpointsAreRejected) {
  const auto c = corpus::build("monoid_n3");
  EXPECT_THROW(is_equivalence(identity_functor(c), EquivalenceVariant::a), PreconditionError);
}

TEST(Equivalence, ThreeForTwoOnRandomChains) {
  gen::Rng rng(99);
  for (int k = 0; k < 40; ++k) {
    const auto chain = gen::random_chain(rng, 2 + k % 2, 2);
    const bool f = is_equivalence(chain[0], EquivalenceVariant::b).ok;
    const bool g = is_equivalence(chain[1], EquivalenceVariant::b).ok;
    const bool gf = is_equivalence(compose(chain[1], chain[0]), EquivalenceVariant::b).ok;
    if (int(f) + int(g) + int(gf) >= 2) {
      EXPECT_TRUE(f && g && gf);
    }
  }
}

TEST(Homotopy, EilenbergMacLaneGroupsAreConcentrated) {
  for (const auto& g : gen::small_groups()) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 1; i <= n; ++i) {
        if (i == 3 && n != 3) continue;
        const auto c = gen::eilenberg_maclane(g, i, n);
        for (int j = 1; j <= n; ++j) {
          const auto pj = homotopy_group(c, j, Index{0});
          if (j == i) {
            EXPECT_TRUE(isomorphic(pj, g));
          } else {
            EXPECT_EQ(pj.size(), 1u);
          }
        }
      }
    }
  }
}

TEST(Homotopy, ProductsMultiply) {
  const auto z2 = cyclic_group(2), z3 = cyclic_group(3);
  const auto c = corpus::build("product_z2_z3");
  EXPECT_TRUE(isomorphic(homotopy_group(c, 3, Index{0}), direct_product(z2, z3)));
  EXPECT_TRUE(isomorphic(homotopy_group(c, 3, Index{0}), cyclic_group(6)));
}

TEST(Homotopy, DeloopZ2Fixture) {
  const auto c = corpus::build("deloop_z2");
  const auto g = homotopy_group(c, 3, "*");
  EXPECT_TRUE(isomorphic(g, cyclic_group(2)));
  EXPECT_TRUE(g.is_commutative());
}

TEST(Homotopy, LoopIsomorphismOnCorpus) {
  for (const auto& e : corpus::entries()) {
    if (!e.groupoid) continue;
    const auto c = e.build();
    for (Index x = 0; x < c->object_count(); ++x)
      for (int i = 1; i <= c->level(); ++i) EXPECT_TRUE(loop_isomorphism(c, i, x).has_value()) << e.name;
  }
}

TEST(Homotopy, BasepointsInDifferentComponents) {
  const auto c = corpus::build("two_components");
  EXPECT_TRUE(isomorphic(homotopy_group(c, 1, "c"), cyclic_group(3)));
  EXPECT_EQ(homotopy_group(c, 1, "a").size(), 1u);
  EXPECT_THROW(homotopy_group(c, 3, "c"), PreconditionError);
  EXPECT_THROW(homotopy_group(corpus::build("monoid_n3"), 1, Index{0}), PreconditionError);
}

TEST(WeakIdentity, IdentityAlwaysQualifies) {
  for (const auto& name : {"chaotic_ab_2", "deloop1_z3", "deloop_z2", "fatten_z2"}) {
    const auto c = corpus::build(name);
    for (Index x = 0; x < c->object_count(); ++x) {
      const auto got = weak_identity_candidates(c, x);
      const auto& hxx = c->hom(x, x);
      const auto id = hxx.object_name(c->identity(x));
      EXPECT_NE(std::find(got.begin(), got.end(), id), got.end()) << name;
    }
  }
}

TEST(WeakIdentity, ExhaustiveOracle) {
  // Hom(*,*) = discrete Z/2: both elements act invertibly, only 0 is idempotent.
  EXPECT_EQ(weak_identity_candidates(corpus::build("deloop1_discrete_z2"), 0), std::vector<std::string>{"0"});
  // Hom(*,*) = chaotic on Z/2: every element is joined to its square.
  EXPECT_EQ(weak_identity_candidates(deloop1(chaotic_monoidal(cyclic_group(2))), 0),
            (std::vector<std::string>{"0", "1"}));
  // Hom(*,*) = discrete saturating {0,1}: adding 1 is not invertible.
  EXPECT_EQ(weak_identity_candidates(deloop1(discrete(saturating_monoid(2))), 0),
            std::vector<std::string>{"0"});
  // Chaotic: every endomorphism qualifies.
  const auto c = chaotic({"a", "b"}, 2);
  EXPECT_EQ(weak_identity_candidates(c, 0).size(), c->hom(0, 0).object_count());
}
