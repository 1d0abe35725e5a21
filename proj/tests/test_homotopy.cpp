#include <gtest/gtest.h>

#include "brute_force.hpp"

using namespace irtopo;

TEST(IrPath, ExistsExactlyForClosurePoints) {
  for (const auto& s : bf::spaces_up_to(4)) {
    for (PointId x = 0; x < s.size(); ++x) {
      const PointSet cl = closure_via_open_sets(s, PointSet::single(x));
      for (PointId y = 0; y < s.size(); ++y) {
        const auto p = ir_path(s, x, y);
        ASSERT_EQ(p.has_value(), cl.contains(y));
        if (!p) continue;
        EXPECT_EQ(p->at(QRational(0)), x);
        EXPECT_EQ(p->at(QRational(1, 2)), x);
        EXPECT_EQ(p->at(QRational(1)), y);
        EXPECT_TRUE(p->image().is_subset_of(cl));
      }
    }
  }
}

TEST(IrPath, ReverseRequiresSymmetricReach) {
  const FiniteSpace s = bf::sierpinski();
  EXPECT_FALSE(reverse_exists(s, 0, 1));
  try {
    reverse_exists(s, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoForwardPath);
  }
  const FiniteSpace indiscrete = bf::space({"u", "v"}, {{0, 1}, {1, 0}});
  EXPECT_TRUE(reverse_exists(indiscrete, 0, 1));
}

TEST(IrPath, InvalidPoint) {
  try {
    ir_path(bf::sierpinski(), 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidPoint);
  }
}

TEST(IrCo, MatchesIntersectionOfClosures) {
  for (const auto& s : bf::spaces_up_to(4)) {
    EXPECT_EQ(ir_co(s), bf::co(s));
    EXPECT_EQ(is_ir_contractible(s).has_value(), !bf::co(s).empty());
  }
}

TEST(IrCo, KnownSpaces) {
  EXPECT_EQ(ir_co(bf::sierpinski()), PointSet{1});
  EXPECT_TRUE(ir_co(bf::discrete(2)).empty());
  EXPECT_TRUE(ir_co(bf::pseudocircle()).empty());
  EXPECT_EQ(ir_co(bf::point()), PointSet{0});
  EXPECT_EQ(ir_co(chain_space(5)), PointSet{4});
}

TEST(IrPathConnected, EveryPairJoinedByAPathOneWay) {
  for (const auto& s : bf::spaces_up_to(4)) {
    bool all = true;
    for (PointId x = 0; x < s.size(); ++x) {
      for (PointId y = 0; y < s.size(); ++y) {
        if (!ir_path(s, x, y) && !ir_path(s, y, x)) all = false;
      }
    }
    EXPECT_EQ(is_ir_path_connected(s), all);
  }
  EXPECT_TRUE(is_ir_path_connected(bf::sierpinski()));
  EXPECT_FALSE(is_ir_path_connected(bf::discrete(2)));
  EXPECT_TRUE(is_ir_path_connected(bf::point()));
  // connected but the two maximal points are not joined
  EXPECT_FALSE(is_ir_path_connected(bf::space({"g", "a", "b"}, {{0, 1}, {0, 2}})));
}

TEST(ContinuousMap, RejectsDiscontinuousAssignments) {
  const FiniteSpace s = bf::sierpinski();
  try {
    ContinuousMap(s, s, {1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotContinuous);
  }
  try {
    ContinuousMap(s, s, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MapMismatch);
  }
  EXPECT_EQ(discontinuity_witness(s, s, {1, 0}), PointSet{0});
  EXPECT_FALSE(preimages_are_open(s, s, {1, 0}));
}

TEST(ContinuousMap, EnumerationMatchesPreimageTest) {
  const auto spaces = bf::spaces_up_to(3);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      EXPECT_EQ(continuous_assignments(x, y), bf::continuous_maps(x, y));
    }
  }
}

TEST(ContinuousMap, BudgetIsEnforced) {
  try {
    continuous_assignments(bf::discrete(8), bf::discrete(8), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SearchBudgetExceeded);
  }
}

TEST(ContinuousMap, CompositionAndIdentity) {
  const FiniteSpace s = bf::sierpinski();
  const FiniteSpace p = bf::point();
  const auto c = ContinuousMap::constant(s, p, 0);
  const auto g = ContinuousMap(p, s, {1});
  const auto gc = compose(g, c);
  EXPECT_EQ(gc.assignment(), (std::vector<PointId>{1, 1}));
  EXPECT_EQ(compose(ContinuousMap::identity(s), gc), gc);
  EXPECT_THROW(compose(c, c), Error);
}

TEST(IrHomotopic, AgreesWithCylinderSearch) {
  const auto spaces = bf::spaces_up_to(3);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      const auto realized = realizable_homotopy_pairs(x, y);
      const auto maps = continuous_assignments(x, y);
      for (const auto& a : maps) {
        for (const auto& b : maps) {
          const auto cert = ir_homotopic(ContinuousMap(x, y, a), ContinuousMap(x, y, b));
          ASSERT_EQ(cert.has_value(), realized.count({a, b}) > 0);
          if (cert) {
            EXPECT_TRUE(cert->two_piece_is_continuous());
          }
        }
      }
    }
  }
}

TEST(IrHomotopic, IsDirected) {
  const FiniteSpace s = bf::sierpinski();
  const auto id = ContinuousMap::identity(s);
  const auto top = ContinuousMap::constant(s, s, 1);
  const std::vector<PointId> id_v{0, 1}, top_v{1, 1};
  ASSERT_TRUE(chain_homotopy_oracle(s, s, id_v, top_v));
  ASSERT_FALSE(chain_homotopy_oracle(s, s, top_v, id_v));
  const auto forward = ir_homotopic(id, top);
  ASSERT_TRUE(forward.has_value());
  EXPECT_EQ(forward->at(0, QRational(1, 2)), 0u);
  EXPECT_EQ(forward->at(0, QRational(1)), 1u);
  EXPECT_FALSE(ir_homotopic(top, id).has_value());
}

TEST(IrHomotopic, CylinderOracleExamples) {
  const FiniteSpace s = bf::sierpinski();
  EXPECT_TRUE(chain_homotopy_oracle(s, s, {0, 1}, {1, 1}));
  const FiniteSpace d = bf::discrete(2);
  EXPECT_FALSE(chain_homotopy_oracle(d, d, {0, 1}, {1, 0}));
  EXPECT_TRUE(chain_homotopy_oracle(d, d, {1, 0}, {1, 0}));
}

TEST(Equivalence, AgreesWithCylinderSearchOnSmallPairs) {
  const auto spaces = bf::spaces_up_to(2);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      for (bool identity_first : {true, false}) {
        const auto orientation = identity_first ? EquivalenceOrientation::identity_to_composite
                                                : EquivalenceOrientation::composite_to_identity;
        EXPECT_EQ(ir_homotopy_equivalent(x, y, orientation).has_value(),
                  bf::equivalent_by_cylinders(x, y, identity_first));
      }
    }
  }
}

TEST(Equivalence, SierpinskiAndPoint) {
  const FiniteSpace s = bf::sierpinski();
  const FiniteSpace p = bf::point();
  ASSERT_TRUE(bf::equivalent_by_cylinders(s, p, true));
  ASSERT_TRUE(bf::equivalent_by_cylinders(s, p, false));
  const auto forward = ir_homotopy_equivalent(s, p);
  ASSERT_TRUE(forward.has_value());
  EXPECT_EQ(forward->g.assignment(), std::vector<PointId>{1});
  const auto backward = ir_homotopy_equivalent(s, p, EquivalenceOrientation::composite_to_identity);
  ASSERT_TRUE(backward.has_value());
  EXPECT_EQ(backward->g.assignment(), std::vector<PointId>{0});
}

TEST(Equivalence, ParallelSearchReturnsTheSamePair) {
  const FiniteSpace c = chain_space(3);
  const FiniteSpace s = bf::sierpinski();
  const auto one = ir_homotopy_equivalent(c, s, EquivalenceOrientation::identity_to_composite, kDefaultMapBudget, 1);
  const auto four = ir_homotopy_equivalent(c, s, EquivalenceOrientation::identity_to_composite, kDefaultMapBudget, 4);
  ASSERT_EQ(one.has_value(), four.has_value());
  if (one) {
    EXPECT_EQ(one->f, four->f);
    EXPECT_EQ(one->g, four->g);
  }
}

TEST(Equivalence, DiscreteTwoIsNotAPoint) {
  ASSERT_FALSE(bf::equivalent_by_cylinders(bf::discrete(2), bf::point(), true));
  EXPECT_FALSE(ir_homotopy_equivalent(bf::discrete(2), bf::point()).has_value());
}
