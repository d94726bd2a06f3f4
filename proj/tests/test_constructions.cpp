#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strictcat/strictcat.hpp"

using namespace strictcat;

namespace {

std::vector<FinCat::Ptr> samples() {
  return {corpus::build("deloop_z2"), corpus::build("chaotic_abc_3"), corpus::build("bz2_raised3"),
          corpus::build("deloop2_discrete_z2"), corpus::build("terminal3")};
}

}  // namespace

TEST(Product, CellCountsMultiply) {
  for (const auto& a : samples()) {
    for (const auto& b : samples()) {
      const auto p = product(a, b);
      const auto sa = oracle::shape(*a), sb = oracle::shape(*b), sp = oracle::shape(*p.cat);
      for (std::size_t i = 0; i < sp.size(); ++i) EXPECT_EQ(sp[i], sa[i] * sb[i]);
      EXPECT_TRUE(validate_cat(*p.cat).ok());
    }
  }
}

TEST(Product, ProjectionsAndPairing) {
  const auto a = corpus::build("deloop_z3");
  const auto b = corpus::build("chaotic_abc_3");
  const auto p = product(a, b);
  const auto l = p.projection_left();
  const auto r = p.projection_right();
  EXPECT_TRUE(validate_functor(l).ok());
  EXPECT_TRUE(validate_functor(r).ok());
  EXPECT_TRUE(p.pairing(l, r) == identity_functor(p.cat));
  for (int i = 0; i <= 3; ++i) {
    for (Index cell = 0; cell < p.cat->cell_count(i); ++cell) {
      const auto [x, y] = p.split(i, cell);
      EXPECT_EQ(p.pair(i, x, y), cell);
      EXPECT_EQ(l(i, cell), x);
      EXPECT_EQ(r(i, cell), y);
    }
  }
}

TEST(Product, DiagonalThenProjectionIsIdentity) {
  const auto c = corpus::build("deloop1_z3");
  const auto d = diagonal(c);
  const auto p = product(c, c);
  EXPECT_TRUE(validate_functor(d).ok());
  EXPECT_TRUE(compose(p.projection_left(), d) == identity_functor(c));
  EXPECT_TRUE(compose(p.projection_right(), d) == identity_functor(c));
}

TEST(Product, FunctorProductActsComponentwise) {
  const auto z2 = cyclic_group(2);
  const auto f = gen::eilenberg_maclane(z2, cyclic_group(4), {0, 2}, 2, 3);
  const auto g = to_terminal(corpus::build("chaotic_abc_3"));
  const auto fg = product(f, g);
  EXPECT_TRUE(validate_functor(fg).ok());
  const auto ps = product(f.source, g.source);
  const auto pt = product(f.target, g.target);
  for (int i = 0; i <= 3; ++i) {
    for (Index cell = 0; cell < ps.cat->cell_count(i); ++cell) {
      const auto [x, y] = ps.split(i, cell);
      EXPECT_EQ(fg(i, cell), pt.pair(i, f(i, x), g(i, y)));
    }
  }
}

TEST(Coproduct, CountsAddAndInclusionsCopair) {
  const auto a = with_object_names(*corpus::build("deloop_z2"), {"x"});
  const auto b = corpus::build("chaotic_abc_3");
  const auto c = coproduct(a, b);
  EXPECT_TRUE(validate_cat(*c.cat).ok());
  const auto sa = oracle::shape(*a), sb = oracle::shape(*b), sc = oracle::shape(*c.cat);
  for (std::size_t i = 0; i < sc.size(); ++i) EXPECT_EQ(sc[i], sa[i] + sb[i]);
  EXPECT_TRUE(c.copairing(c.inclusion_left(), c.inclusion_right()) == identity_functor(c.cat));
  EXPECT_EQ(oracle::components(*c.cat).size(), 2u);
  EXPECT_THROW(coproduct(b, b), StructuralError);
}

TEST(Raise, AddsOnlyIdentityTopCells) {
  for (const auto& name : {"bz2", "monoid_n3", "deloop1_z3", "interval"}) {
    const auto c = corpus::build(name);
    const auto r = raise(c);
    EXPECT_EQ(r->level(), c->level() + 1);
    EXPECT_TRUE(validate_cat(*r).ok());
    const auto sc = oracle::shape(*c), sr = oracle::shape(*r);
    for (std::size_t i = 0; i < sc.size(); ++i) EXPECT_EQ(sr[i], sc[i]);
    EXPECT_EQ(sr.back(), sc.back());
    for (Index u = 0; u < r->cell_count(r->level()); ++u) EXPECT_TRUE(r->is_identity(r->level(), u));
  }
}

TEST(Functors, CompositionIsAssociativeAndUnital) {
  gen::Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    const auto chain = gen::random_chain(rng, 2 + k % 2, 3);
    const auto left = compose(chain[2], compose(chain[1], chain[0]));
    const auto right = compose(compose(chain[2], chain[1]), chain[0]);
    EXPECT_TRUE(left == right);
    EXPECT_TRUE(validate_functor(left).ok());
    EXPECT_TRUE(compose(chain[0], identity_functor(chain[0].source)) == chain[0]);
    EXPECT_TRUE(compose(identity_functor(chain[0].target), chain[0]) == chain[0]);
  }
}

TEST(Functors, ConstantAndTerminal) {
  const auto a = corpus::build("deloop_z3");
  const auto b = corpus::build("chaotic_abc_3");
  for (Index y = 0; y < b->object_count(); ++y) {
    const auto f = constant_functor(a, b, y);
    EXPECT_TRUE(validate_functor(f).ok());
    for (int i = 1; i <= 3; ++i)
      for (Index u = 0; u < a->cell_count(i); ++u) EXPECT_TRUE(b->is_identity(i, f(i, u)));
  }
  EXPECT_TRUE(validate_functor(to_terminal(b)).ok());
}

TEST(Functors, HomFunctorOfProjection) {
  const auto p = product(corpus::build("deloop1_z3"), chaotic({"s", "t"}, 2));
  const auto pr = p.projection_left();
  const auto h = hom_functor(pr, 0, 1);
  EXPECT_TRUE(validate_functor(h).ok());
  EXPECT_TRUE(is_fully_faithful(pr));
  EXPECT_FALSE(is_fully_faithful(p.projection_right()));
}

TEST(Subcategory, FullSubcategoryKeepsHoms) {
  const auto c = corpus::build("two_components");
  const auto s = full_subcategory(c, {c->object_index("c")});
  EXPECT_TRUE(validate_cat(*s.cat).ok());
  EXPECT_TRUE(validate_functor(s.inclusion).ok());
  EXPECT_EQ(s.cat->hom(0, 0), c->hom(c->object_index("c"), c->object_index("c")));
}

TEST(Rename, WithObjectNamesPreservesStructure) {
  const auto c = corpus::build("chaotic_ab_2");
  const auto r = with_object_names(*c, {"p", "q"});
  EXPECT_TRUE(same_shape(*c, *r));
  EXPECT_EQ(r->object_name(1), "q");
  EXPECT_THROW(with_object_names(*c, {"p"}), StructuralError);
}
