#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"

using namespace irtopo;

TEST(Enumeration, CountsPerSize) {
  const std::vector<std::size_t> expected{1, 4, 29, 355, 6942};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_space(n, [&](const FiniteSpace&) { ++count; });
    EXPECT_EQ(count, expected[n - 1]) << n;
  }
}

TEST(Enumeration, MatchesOpenFamilyCount) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(enumerate_spaces(n).size(), count_topologies_by_open_families(n)) << n;
  }
}

TEST(Enumeration, YieldsDistinctTopologies) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& s : enumerate_spaces(n)) {
      const Relation r = s.reach_relation();
      EXPECT_FALSE(r.reflexivity_violation());
      EXPECT_FALSE(r.transitivity_violation());
      std::vector<std::uint64_t> key;
      for (PointSet o : open_sets(s)) key.push_back(o.bits());
      EXPECT_TRUE(seen.insert(key).second);
    }
  }
}

TEST(Enumeration, RejectsUnsupportedSizes) {
  for (std::size_t n : {0, 6}) {
    try {
      enumerate_spaces(n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    }
  }
}

TEST(Enumeration, T0CountsAreLabelledPosets) {
  const std::vector<std::size_t> posets{1, 3, 19, 219, 4231};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_space(n, [&](const FiniteSpace& s) { count += is_T0(s) ? 1 : 0; });
    EXPECT_EQ(count, posets[n - 1]);
  }
}

TEST(BoxTopology, SierpinskiSquare) {
  const auto opens = box_topology(bf::sierpinski(), bf::sierpinski());
  // ∅, {00}, {00,01}, {00,10}, {00,01,10}, all four
  EXPECT_EQ(opens.size(), 6u);
}

TEST(CylinderSearch, CountsMatchPointwiseCriterion) {
  // On Sierpinski, (f, g) is realizable iff g(x) lies above f(x) pointwise;
  // the continuous self-maps are 00, 01, 11.
  const FiniteSpace s = bf::sierpinski();
  const auto pairs = realizable_homotopy_pairs(s, s);
  EXPECT_EQ(pairs.size(), 6u);
  EXPECT_TRUE(pairs.count({{0, 0}, {1, 1}}));
  EXPECT_FALSE(pairs.count({{1, 1}, {0, 0}}));
}

TEST(CylinderSearch, BudgetIsEnforced) {
  try {
    chain_homotopy_oracle(bf::discrete(4), bf::discrete(4), {0, 1, 2, 3}, {0, 1, 2, 3}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SearchBudgetExceeded);
  }
}
