#include <gtest/gtest.h>

#include "strictcat/strictcat.hpp"

using namespace strictcat;

namespace {

const std::vector<std::string> expected_claims{
    "input.fiber_abelian", "input.family", "C.fatten.contractible", "C.proxy.groupoid",
    "B.shape", "g.functor", "g.equivalence.a", "G.monoid_laws", "generators",
    "p.monoid_map", "p.pi0_surjection", "Gprime.fully_faithful", "Gprime.pi0",
    "A.groupoid", "f.functor", "f.equivalence.a", "f.pi3_bijective", "phi",
    "nf.unique", "nf.compose", "nf.sum", "nf.interchange", "h.functor", "h.sum",
    "h.identity_on_H", "D.homotopy", "h.proxy_functor", "pi3_h.iso", "basepoints"};

SplitParams small(std::vector<std::size_t> h, long r, std::size_t fatten, long window) {
  SplitParams p;
  p.h_factors = std::move(h);
  p.r = r;
  p.fatten = fatten;
  p.window = window;
  return p;
}

}  // namespace

TEST(Split, CertificateListsEveryClaimInOrder) {
  const auto d = split(small({2}, 1, 1, 2));
  ASSERT_TRUE(d.certificate.ok());
  std::vector<std::string> names;
  for (const auto& c : d.certificate.claims) names.push_back(c.name);
  EXPECT_EQ(names, expected_claims);
}

TEST(Split, ModesAreRecorded) {
  const auto d = split(small({2}, 1, 1, 2));
  EXPECT_EQ(d.certificate.find("D.homotopy")->mode, Mode::exhaustive);
  EXPECT_EQ(d.certificate.find("nf.compose")->mode, Mode::window);
  EXPECT_EQ(d.certificate.find("phi")->mode, Mode::structural);
}

TEST(Split, DiagramHomotopy) {
  const auto d = split(small({3}, 2, 2, 2));
  EXPECT_EQ(d.proxy_d->object_count(), 1u);
  EXPECT_EQ(homotopy_group(d.proxy_d, 1, Index{0}).size(), 1u);
  EXPECT_EQ(homotopy_group(d.proxy_d, 2, Index{0}).size(), 1u);
  EXPECT_TRUE(isomorphic(homotopy_group(d.proxy_d, 3, Index{0}), cyclic_group(3)));
  EXPECT_TRUE(isomorphic(homotopy_group(d.proxy_a, 3, Index{0}), cyclic_group(3)));
  EXPECT_TRUE(is_equivalence(d.proxy_g, EquivalenceVariant::b).ok);
  EXPECT_TRUE(is_equivalence(d.proxy_f, EquivalenceVariant::c).ok);
}

TEST(Split, ProductFiber) {
  EXPECT_TRUE(split(small({2, 2}, 1, 1, 2)).certificate.ok());
}

TEST(Split, UnitSkeletonFallbackStillPasses) {
  auto p = small({3}, 1, 1, 2);
  p.scan_budget = 1;
  EXPECT_TRUE(split(p).certificate.ok());
}

TEST(Split, ParameterBounds) {
  EXPECT_THROW(split(small({2}, 1, 1, 9)), PreconditionError);
  EXPECT_THROW(split(small({2}, 1, 1, 0)), PreconditionError);
  EXPECT_THROW(split(small({2}, 0, 1, 2)), PreconditionError);
  EXPECT_THROW(split(small({2}, 1, 0, 2)), PreconditionError);
  EXPECT_THROW(split(small({5, 13}, 1, 1, 2)), PreconditionError);
}

TEST(RestrictToUnit, KeepsOnlyTheBasepoint) {
  const auto c = corpus::build("fatten_z2");
  const auto r = restrict_to_unit(c, c->object_name(1));
  EXPECT_EQ(r.cat->object_count(), 1u);
  EXPECT_EQ(r.cat->cell_count(1), 1u);
  EXPECT_TRUE(isomorphic(homotopy_group(r.cat, 3, Index{0}), cyclic_group(2)));
  EXPECT_TRUE(validate_cat(*r.cat).ok());
  EXPECT_TRUE(validate_functor(r.inclusion).ok());
  EXPECT_EQ(r.inclusion(0, 0), 1u);
}
