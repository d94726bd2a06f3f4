#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strictcat/strictcat.hpp"

using namespace strictcat;

TEST(FinCat, TerminalHasOneCellAtEveryLevel) {
  for (int n = 0; n <= 4; ++n) {
    const auto t = terminal(n);
    EXPECT_EQ(oracle::shape(*t), std::vector<std::size_t>(n + 1, 1));
    EXPECT_TRUE(validate_cat(*t).ok());
  }
}

TEST(FinCat, ChaoticCellCounts) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto c = chaotic(gen::names(k, "o"), 3);
    const auto s = oracle::shape(*c);
    EXPECT_EQ(s[0], k);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(s[i], k * k);
  }
}

TEST(FinCat, AddressesRoundTripOnCorpus) {
  for (const auto& e : corpus::entries()) {
    const auto c = e.build();
    for (int i = 0; i <= c->level(); ++i) {
      for (Index cell = 0; cell < c->cell_count(i); ++cell) {
        const auto addr = c->address(i, cell);
        ASSERT_EQ(c->find_cell(i, addr), cell) << e.name << " " << addr;
      }
    }
  }
}

TEST(FinCat, FacesOfOneCellsMatchTheirBlock) {
  const auto c = corpus::build("two_components");
  for (Index f = 0; f < c->cell_count(1); ++f) {
    const auto loc = c->locate(1, f);
    EXPECT_EQ(c->source(1, f), loc.x);
    EXPECT_EQ(c->target(1, f), loc.y);
  }
}

TEST(FinCat, GlobularIdentities) {
  for (const auto& e : corpus::entries()) {
    const auto c = e.build();
    for (int i = 2; i <= c->level(); ++i) {
      for (Index u = 0; u < c->cell_count(i); ++u) {
        EXPECT_EQ(c->source(i - 1, c->source(i, u)), c->source(i - 1, c->target(i, u))) << e.name;
        EXPECT_EQ(c->target(i - 1, c->source(i, u)), c->target(i - 1, c->target(i, u))) << e.name;
      }
    }
  }
}

TEST(FinCat, CompositionOfNonComposableCells) {
  const auto c = corpus::build("two_components");
  const Index a = c->object_index("a"), cc = c->object_index("c");
  const Index f = c->identity_cell(0, a);
  const Index g = c->identity_cell(0, cc);
  EXPECT_FALSE(c->try_compose(1, 0, f, g).has_value());
  EXPECT_THROW(c->compose(1, 0, f, g), ComposabilityError);
  EXPECT_FALSE(c->try_compose(1, 1, f, f).has_value());
}

TEST(FinCat, StructuralChecks) {
  EXPECT_THROW(FinCat::make_set({"a", "a"}), StructuralError);
  EXPECT_THROW(FinCat::make_set({"a/b"}), StructuralError);
  EXPECT_THROW(FinCat::make_set({"a|b"}), StructuralError);
  EXPECT_THROW(FinCat::make_set({""}), StructuralError);
  const auto pt = FinCat::make_set({"1"});
  CompositionTable dangling{{{5}}};
  EXPECT_THROW(FinCat::make(1, {"*"}, {pt}, {0}, {dangling}), StructuralError);
  CompositionTable partial{{{}}};
  EXPECT_THROW(FinCat::make(1, {"*"}, {pt}, {0}, {partial}), StructuralError);
  EXPECT_THROW(FinCat::make(1, {"*"}, {pt}, {1}, {CompositionTable{{{0}}}}), StructuralError);
  EXPECT_THROW(FinCat::make(2, {"*"}, {pt}, {0}, {CompositionTable{{{0}}}}), StructuralError);
}

TEST(Validate, CorpusValidates) {
  for (const auto& e : corpus::entries()) {
    EXPECT_TRUE(validate_cat(*e.build()).ok()) << e.name;
  }
}

TEST(Validate, BrokenUnitLawIsReported) {
  const auto good = bracket(cyclic_group(3)).underlying;
  auto table = good->composition(0, 0, 0);
  table.levels[0][1 * 3 + 0] = 2;  // 1 + 0 := 2
  const auto bad = FinCat::make(1, {"0"}, {good->hom_ptr(0, 0)}, {0}, {table});
  const auto report = validate_cat(*bad);
  ASSERT_FALSE(report.ok());
  bool unit = false;
  for (const auto& v : report.violations) unit = unit || v.axiom.rfind("unit", 0) == 0;
  EXPECT_TRUE(unit);
}

TEST(Validate, AssociativityMatchesBruteForceOnRandomMagmas) {
  std::mt19937 rng(11);
  int associative = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<Index> table(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        table[a * n + b] = a == 0 ? b : b == 0 ? a : std::uniform_int_distribution<Index>(0, n - 1)(rng);
      }
    }
    std::vector<std::string> names;
    for (Index a = 0; a < n; ++a) names.push_back(std::to_string(a));
    const auto c = FinCat::make(1, {"*"}, {FinCat::make_set(names)}, {0}, {CompositionTable{{table}}});
    const bool expect = oracle::associative(table, n);
    associative += expect;
    EXPECT_EQ(validate_cat(*c).ok(), expect) << "trial " << trial;
  }
  EXPECT_GT(associative, 0);
  EXPECT_LT(associative, 300);
}

TEST(Validate, BrokenInterchangeIsReported) {
  // Two 2-cells over one 1-cell whose horizontal composite disagrees with
  // the vertical one: a commutative but non-interchanging level-2 table.
  const auto h = FinCat::make_set({"e", "a"});
  const auto one = FinCat::make(1, {"1"}, {h}, {0}, {CompositionTable{{{0, 1, 1, 0}}}});
  const auto c = FinCat::make(2, {"*"}, {one}, {0},
                              {CompositionTable{{{0}, {0, 1, 1, 1}}}});
  EXPECT_FALSE(validate_cat(*c).ok());
}

TEST(Validate, EckmannHiltonOnDeloopings) {
  for (const auto& name : {"deloop_z2", "deloop_z2xz2", "deloop2_discrete_z2", "deloop1_z3", "product_z2_z3"}) {
    const auto c = corpus::build(name);
    for (Index x = 0; x < c->object_count(); ++x) EXPECT_TRUE(eckmann_hilton_check(*c, x).ok()) << name;
  }
  EXPECT_THROW(eckmann_hilton_check(*terminal(1), 0), PreconditionError);
}

TEST(Validate, FunctorsOnEilenbergMacLaneMatchAdditivity) {
  // All maps Z/p -> Z/q on the level-1 deloopings; functoriality is exactly
  // additivity of the map.
  for (std::size_t p : {2, 3, 4}) {
    for (std::size_t q : {2, 3, 4}) {
      const auto s = bracket(cyclic_group(p)).underlying;
      const auto t = bracket(cyclic_group(q)).underlying;
      std::vector<Index> f(p, 0);
      const auto total = static_cast<std::size_t>(std::pow(q, p));
      for (std::size_t code = 0; code < total; ++code) {
        auto rest = code;
        for (auto& v : f) {
          v = rest % q;
          rest /= q;
        }
        const StrictFunctor fun{s, t, {{0}, f}};
        EXPECT_EQ(validate_functor(fun).ok(), oracle::additive(f, p, q));
      }
    }
  }
}
