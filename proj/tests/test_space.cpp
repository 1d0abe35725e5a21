#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"

using namespace irtopo;

TEST(PointSet, BasicOperations) {
  PointSet a{0, 2};
  PointSet b{2, 3};
  EXPECT_EQ(a.size(), 2u);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a | b, (PointSet{0, 2, 3}));
  EXPECT_EQ(a & b, PointSet{2});
  EXPECT_EQ(a - b, PointSet{0});
  EXPECT_EQ(a.complement(4), (PointSet{1, 3}));
  EXPECT_EQ(a.to_string(), "{0,2}");
  EXPECT_EQ(PointSet::full(3), (PointSet{0, 1, 2}));
  EXPECT_EQ((std::vector<PointId>{0, 2}), a.to_vector());
}

TEST(PointSet, OrderIsBySizeThenBits) {
  EXPECT_LT(PointSet{3}, (PointSet{0, 1}));
  EXPECT_LT(PointSet{0}, PointSet{1});
  EXPECT_LT(PointSet{}, PointSet{0});
}

TEST(FiniteSpace, SierpinskiOpenSets) {
  const FiniteSpace s = bf::sierpinski();
  EXPECT_EQ(open_sets(s), (std::vector<PointSet>{PointSet{}, PointSet{0}, PointSet{0, 1}}));
  EXPECT_EQ(s.min_open(1), (PointSet{0, 1}));
  EXPECT_EQ(s.closure_of_point(0), (PointSet{0, 1}));
  EXPECT_TRUE(is_T0(s));
  EXPECT_FALSE(is_T1(s));
  EXPECT_TRUE(is_hyperconnected(s));
}

TEST(FiniteSpace, PseudocircleHasSevenOpenSets) {
  const FiniteSpace s = bf::pseudocircle();
  const auto opens = open_sets(s);
  // ∅, {a}, {b}, {a,b}, {a,b,c}, {a,b,d}, X
  EXPECT_EQ(opens.size(), 7u);
  EXPECT_FALSE(is_hyperconnected(s));
}

TEST(FiniteSpace, FromOpenSetsRejectsNonTopologies) {
  const std::vector<PointSet> missing_union{PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1, 2}};
  try {
    FiniteSpace::from_open_sets(default_labels(3), missing_union);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotATopology);
  }
  const std::vector<PointSet> no_empty{PointSet{0, 1}};
  EXPECT_THROW(FiniteSpace::from_open_sets(default_labels(2), no_empty), Error);
  const std::vector<PointSet> out_of_range{PointSet{}, PointSet{5}, PointSet{0, 1}};
  try {
    FiniteSpace::from_open_sets(default_labels(2), out_of_range);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidPoint);
  }
}

TEST(FiniteSpace, FromReachRejectsNonPreorders) {
  Relation r = Relation::identity(3);
  r.set(0, 1);
  r.set(1, 2);
  try {
    FiniteSpace::from_reach(default_labels(3), r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ReachNotPreorder);
  }
  try {
    FiniteSpace::from_reach({"a", "a"}, Relation::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateLabel);
  }
}

TEST(FiniteSpace, TooManyPoints) {
  try {
    FiniteSpace::from_reach(default_labels(65), Relation::identity(65));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooManyPoints);
  }
}

TEST(FiniteSpace, OpenSetsRoundTripForAllSmallSpaces) {
  for (const auto& s : bf::spaces_up_to(4)) {
    const auto opens = open_sets(s);
    const FiniteSpace back = FiniteSpace::from_open_sets(s.labels(), opens);
    EXPECT_EQ(back, s);
    for (PointSet o : opens) EXPECT_TRUE(s.is_open(o));
  }
}

TEST(FiniteSpace, ClosureAndInteriorMatchOpenSetDefinitions) {
  for (const auto& s : bf::spaces_up_to(3)) {
    const auto opens = open_sets(s);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.size()); ++bits) {
      const PointSet a(bits);
      EXPECT_EQ(closure(s, a), closure_via_open_sets(s, a));
      PointSet inner;
      for (PointSet o : opens) {
        if (o.is_subset_of(a)) inner |= o;
      }
      EXPECT_EQ(interior(s, a), inner);
    }
  }
}

TEST(FiniteSpace, SeparationAxiomsMatchOpenSetDefinitions) {
  for (const auto& s : bf::spaces_up_to(4)) {
    const auto opens = open_sets(s);
    bool t0 = true;
    bool t1 = true;
    for (PointId x = 0; x < s.size(); ++x) {
      for (PointId y = 0; y < s.size(); ++y) {
        if (x == y) continue;
        bool x_not_y = false;
        bool y_not_x = false;
        for (PointSet o : opens) {
          x_not_y = x_not_y || (o.contains(x) && !o.contains(y));
          y_not_x = y_not_x || (o.contains(y) && !o.contains(x));
        }
        t0 = t0 && (x_not_y || y_not_x);
        t1 = t1 && x_not_y && y_not_x;
      }
    }
    bool hyper = true;
    for (PointSet a : opens) {
      for (PointSet b : opens) {
        if (!a.empty() && !b.empty() && !a.intersects(b)) hyper = false;
      }
    }
    EXPECT_EQ(is_T0(s), t0);
    EXPECT_EQ(is_T1(s), t1);
    EXPECT_EQ(is_hyperconnected(s), hyper);
  }
}

TEST(FiniteSpace, ProductTopologyIsTheBoxTopology) {
  const auto spaces = bf::spaces_up_to(3);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      EXPECT_EQ(open_sets(product(x, y)), box_topology(x, y));
    }
  }
}

TEST(FiniteSpace, ProductLabels) {
  const FiniteSpace p = product(bf::sierpinski(), bf::point());
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"(0,p)", "(1,p)"}));
}

TEST(FiniteSpace, SubspaceOpensAreTraces) {
  for (const auto& s : bf::spaces_up_to(3)) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s.size()); ++bits) {
      const PointSet a(bits);
      const FiniteSpace sub = subspace(s, a);
      const auto members = a.to_vector();
      std::set<std::uint64_t> traces;
      for (PointSet o : open_sets(s)) {
        PointSet t;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (o.contains(members[i])) t.insert(i);
        }
        traces.insert(t.bits());
      }
      std::set<std::uint64_t> got;
      for (PointSet o : open_sets(sub)) got.insert(o.bits());
      EXPECT_EQ(got, traces);
    }
  }
  try {
    subspace(bf::sierpinski(), PointSet{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySubspace);
  }
}

TEST(FiniteSpace, LabelsDoNotAffectEquality) {
  EXPECT_EQ(bf::space({"x", "y"}, {{0, 1}}), bf::sierpinski());
  EXPECT_FALSE(bf::discrete(2) == bf::sierpinski());
}

TEST(JsonIo, RoundTripAndConsistency) {
  for (const auto& s : bf::spaces_up_to(3)) {
    const auto doc = json_io::space_to_json(s);
    EXPECT_EQ(json_io::space_from_json(doc), s);
    auto only_opens = doc;
    only_opens.erase("reach");
    EXPECT_EQ(json_io::space_from_json(only_opens), s);
  }
  auto bad = json_io::space_to_json(bf::sierpinski());
  bad["reach"] = nlohmann::json::array();
  try {
    json_io::space_from_json(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
}

TEST(JsonIo, MalformedInput) {
  try {
    json_io::parse_text("{ \"labels\": [");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
  try {
    json_io::space_from_json(nlohmann::json{{"labels", {"a"}}, {"reach", {{0, 3}}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("reach[0]"), std::string::npos);
  }
  EXPECT_THROW(json_io::space_from_json(nlohmann::json{{"labels", {"a"}}}), Error);
}
