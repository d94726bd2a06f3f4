#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strictcat/strictcat.hpp"

using namespace strictcat;

TEST(MonoidObjects, CorpusMonoidObjectsValidate) {
  for (const auto& m : corpus::monoid_objects()) {
    EXPECT_TRUE(validate_monoidal(m.build()).ok()) << m.name;
  }
}

TEST(MonoidObjects, NonCommutativeSumIsReported) {
  // {e, a, b} with x.y = x for x != e: associative, unital, not commutative.
  const std::vector<Index> table{0, 1, 2, 1, 1, 1, 2, 2, 2};
  ASSERT_TRUE(oracle::associative(table, 3));
  const auto u = FinCat::make(1, {"0"}, {FinCat::make_set({"e", "a", "b"})}, {0},
                              {CompositionTable{{table}}});
  const auto g = make_mongpd(u, {0}, table, 0);
  const auto report = validate_monoidal(g);
  ASSERT_FALSE(report.ok());
  bool comm = false;
  for (const auto& v : report.violations) comm = comm || v.axiom.find("commutativity") != std::string::npos;
  EXPECT_TRUE(comm);
}

TEST(MonoidObjects, StructuralChecks) {
  const auto u = bracket(cyclic_group(2)).underlying;
  EXPECT_THROW(make_mongpd(u, {0}, {0, 1, 1}, 0), StructuralError);
  EXPECT_THROW(make_mongpd(terminal(2), {0}, {0}, 0), StructuralError);
  EXPECT_THROW(bracket(FiniteMonoid{{"e", "a", "b"}, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0}), PreconditionError);
}

TEST(Delooping, ShapesOfTheDeloopings) {
  for (const auto& g : gen::small_groups()) {
    const auto n = g.size();
    EXPECT_EQ(oracle::shape(*deloop1(bracket(g))), (std::vector<std::size_t>{1, 1, n}));
    EXPECT_EQ(oracle::shape(*deloop2(bracket(g))), (std::vector<std::size_t>{1, 1, 1, n}));
    EXPECT_EQ(oracle::shape(*deloop2(discrete(g))), (std::vector<std::size_t>{1, 1, n, n}));
    EXPECT_EQ(oracle::shape(*deloop2(chaotic_monoidal(g))), (std::vector<std::size_t>{1, 1, n, n * n}));
  }
}

TEST(Delooping, LoopOfDeloopIsIdentity) {
  for (const auto& m : corpus::monoid_objects()) {
    const auto g = m.build();
    EXPECT_TRUE(loop2(deloop2(g)) == g) << m.name;
  }
}

TEST(Delooping, DeloopOfLoopOnDeloopings) {
  for (const auto& name : {"deloop_z2", "deloop_z4", "deloop2_discrete_z2", "deloop2_chaotic_z2"}) {
    const auto c = corpus::build(name);
    EXPECT_TRUE(*deloop2(loop2(c)) == *c) << name;
  }
}

TEST(Delooping, Pi0OfMonoidObjects) {
  const auto z3 = cyclic_group(3);
  EXPECT_EQ(pi0_monoid(discrete(z3)).size(), 3u);
  EXPECT_EQ(pi0_monoid(chaotic_monoidal(z3)).size(), 1u);
  EXPECT_EQ(pi0_monoid(bracket(z3)).size(), 1u);
  EXPECT_TRUE(as_group(pi0_monoid(discrete(z3))).has_value());
  EXPECT_FALSE(as_group(pi0_monoid(discrete(saturating_monoid(2)))).has_value());
}

TEST(Delooping, DeloopOnceBiconditional) {
  // A one-object, one-arrow category deloops to a groupoid exactly when it is one.
  for (const auto& g : gen::small_groups()) {
    const auto c = deloop1(bracket(g));
    EXPECT_TRUE(is_groupoid(deloop_once(c), GroupoidVariant::v3).ok);
    EXPECT_TRUE(is_groupoid(deloop_once(c), GroupoidVariant::v2).ok);
  }
  for (std::size_t cap = 2; cap <= 4; ++cap) {
    const auto c = deloop1(bracket(saturating_monoid(cap)));
    EXPECT_FALSE(is_groupoid(c, GroupoidVariant::v3).ok);
    EXPECT_FALSE(is_groupoid(deloop_once(c), GroupoidVariant::v3).ok);
    EXPECT_FALSE(is_groupoid(deloop_once(c), GroupoidVariant::v2).ok);
  }
  EXPECT_THROW(deloop_once(chaotic({"a", "b"}, 2)), PreconditionError);
}

TEST(BaseChange, HomsArePulledBack) {
  const auto u = corpus::build("two_components");
  const std::vector<Index> p{2, 0, 2, 1};
  const auto v = base_change(u, {"s", "t", "w", "x"}, p);
  EXPECT_TRUE(validate_cat(*v).ok());
  for (Index s = 0; s < 4; ++s)
    for (Index t = 0; t < 4; ++t)
      EXPECT_EQ(oracle::shape(v->hom(s, t)), oracle::shape(u->hom(p[s], p[t])));
  const auto proj = base_change_projection(v, u, p);
  EXPECT_TRUE(validate_functor(proj).ok());
  EXPECT_TRUE(is_fully_faithful(proj));
  EXPECT_THROW(base_change(u, {"s"}, {0, 1}), StructuralError);
}

TEST(BaseChange, MonoidalVersionChecksTheMonoidMap) {
  const auto g = discrete(cyclic_group(2));
  const auto s = cyclic_group(4);
  const auto v = base_change(g, s, {0, 1, 0, 1});
  EXPECT_TRUE(validate_monoidal(v).ok());
  EXPECT_EQ(v.object_count(), 4u);
  EXPECT_THROW(base_change(g, s, {0, 1, 1, 1}), PreconditionError);
}

TEST(Fatten, ProjectionIsAnEquivalence) {
  const auto c = corpus::build("deloop_z3");
  const auto f = fatten(c, {"s1", "s2", "s3"});
  EXPECT_TRUE(validate_cat(*f.cat).ok());
  const auto pr = f.projection_left();
  for (auto v : {EquivalenceVariant::a, EquivalenceVariant::b, EquivalenceVariant::c})
    EXPECT_TRUE(is_equivalence(pr, v).ok);
  EXPECT_THROW(fatten(corpus::build("deloop1_z3"), {"s"}), PreconditionError);
}

TEST(Delooping, InducedFunctorOnDeloopings) {
  const auto g = bracket(cyclic_group(4));
  const auto k = bracket(cyclic_group(2));
  const StrictFunctor f{g.underlying, k.underlying, {{0}, {0, 1, 0, 1}}};
  const auto d = deloop2(g, k, f);
  EXPECT_TRUE(validate_functor(d).ok());
  EXPECT_FALSE(is_equivalence(d, EquivalenceVariant::a).ok);
  const StrictFunctor bad{g.underlying, k.underlying, {{0}, {0, 1, 1, 1}}};
  EXPECT_THROW(deloop2(g, k, bad), PreconditionError);
}
