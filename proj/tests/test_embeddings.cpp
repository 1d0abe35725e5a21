#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"

using namespace irtopo;

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(QRational::parse("2/4").to_string(), "1/2");
  EXPECT_EQ(QRational::parse("0.3").to_string(), "3/10");
  EXPECT_EQ(QRational::parse("1").to_string(), "1/1");
  EXPECT_EQ(QRational::parse("0").to_string(), "0/1");
  EXPECT_EQ(QRational::parse("-3/6").to_string(), "-1/2");
  EXPECT_EQ((QRational(1, 3) + QRational(1, 6)).to_string(), "1/2");
  EXPECT_LT(QRational(1, 3), QRational(1, 2));
  for (const char* bad : {"", "a", "1/", "/2", "1.2.3", "1/2/3"}) {
    try {
      QRational::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
  try {
    QRational::parse("1/0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OutOfRange);
  }
  EXPECT_THROW(QRational(1) / QRational(0), Error);
}

TEST(QuasiMetric, Axioms) {
  std::mt19937_64 rng(7);
  auto draw = [&] {
    const long long den = 1 + static_cast<long long>(rng() % 20);
    return QRational(static_cast<long long>(rng() % static_cast<std::uint64_t>(den + 1)), den);
  };
  for (int i = 0; i < 2000; ++i) {
    const QRational x = draw(), y = draw(), z = draw();
    EXPECT_EQ(d_ir(x, x), QRational(0));
    EXPECT_GE(d_ir(x, y), QRational(0));
    EXPECT_LE(d_ir(x, z), d_ir(x, y) + d_ir(y, z));
    if (d_ir(x, y) == QRational(0) && d_ir(y, x) == QRational(0)) {
      EXPECT_EQ(x, y);
    }
  }
}

TEST(QuasiMetric, IsAsymmetric) {
  EXPECT_EQ(d_ir(QRational(1, 4), QRational(3, 4)).to_string(), "1/2");
  EXPECT_EQ(d_ir(QRational(3, 4), QRational(1, 4)).to_string(), "0/1");
  try {
    d_ir(QRational(2), QRational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OutOfRange);
  }
}

TEST(Ball, LeftRayEndpoints) {
  const auto b = ball(QRational(1, 3), QRational(1, 4));
  EXPECT_EQ(b.to_string(), "[0/1, 7/12)");
  EXPECT_TRUE(b.contains(QRational(0)));
  EXPECT_TRUE(b.contains(QRational(1, 2)));
  EXPECT_FALSE(b.contains(QRational(7, 12)));
  const auto edge = ball(QRational(1, 2), QRational(1, 2));
  EXPECT_EQ(edge.to_string(), "[0/1, 1/1)");
  EXPECT_FALSE(edge.clipped);
  const auto clipped = ball(QRational(3, 4), QRational(1, 2));
  EXPECT_EQ(clipped.to_string(), "[0/1, 1/1]");
  EXPECT_TRUE(clipped.clipped);
  EXPECT_THROW(ball(QRational(1, 2), QRational(0)), Error);
}

TEST(Ball, MembershipMatchesDistance) {
  for (long long xd = 0; xd <= 12; ++xd) {
    for (long long ed = 1; ed <= 12; ++ed) {
      const QRational x(xd, 12), eps(ed, 12);
      const auto b = ball(x, eps);
      for (long long yd = 0; yd <= 24; ++yd) {
        const QRational y(yd, 24);
        EXPECT_EQ(b.contains(y), d_ir(x, y) < eps);
      }
    }
  }
}

TEST(ChainSpace, InitialSegmentsAreOpen) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const FiniteSpace c = chain_space(k);
    std::vector<PointSet> segments;
    for (std::size_t j = 0; j <= k; ++j) segments.push_back(PointSet::full(j));
    EXPECT_EQ(open_sets(c), segments);
  }
  EXPECT_EQ(chain_space(2), bf::sierpinski());
  EXPECT_THROW(chain_space(0), Error);
}

TEST(Compactness, FiniteSubsetsAndIntervals) {
  const auto r = finite_subset_compactness(std::vector<QRational>{QRational(1, 3), QRational(1, 2), QRational(0)});
  EXPECT_TRUE(r.compact);
  EXPECT_EQ(r.biggest->to_string(), "1/2");
  const auto open_right = finite_subset_compactness(IntervalDescriptor{QRational(0), QRational(1), true, false});
  EXPECT_FALSE(open_right.compact);
  EXPECT_TRUE(open_right.cover_witness.has_value());
  const auto closed = finite_subset_compactness(IntervalDescriptor{QRational(0), QRational(1), true, true});
  EXPECT_TRUE(closed.compact);
  try {
    finite_subset_compactness(std::vector<QRational>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySet);
  }
}

TEST(Compactness, BiggestPointHasOnlyTheWholeSetAsNeighbourhood) {
  // Every open cover of a finite subset needs a member containing the
  // biggest point, and in the left order topology that member is everything.
  const std::vector<GridPoint> line{{{QRational(1, 5)}}, {{QRational(4, 5)}}, {{QRational(1, 2)}}};
  const FiniteSpace s = grid_subspace(line);
  for (PointSet o : open_sets(s)) {
    if (o.contains(1)) {
      EXPECT_EQ(o, s.points());
    }
  }
}

TEST(Grid, ProductOrderAndErrors) {
  const std::vector<GridPoint> pts{{{QRational(0), QRational(0)}},
                                   {{QRational(1, 2), QRational(0)}},
                                   {{QRational(0), QRational(1, 2)}},
                                   {{QRational(1), QRational(1)}}};
  const FiniteSpace s = grid_subspace(pts);
  EXPECT_TRUE(s.reach(0, 1));
  EXPECT_FALSE(s.reach(1, 2));
  EXPECT_EQ(greatest_grid_point(pts), std::optional<PointId>{3});
  const auto r = check_theorem10(pts);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.co, PointSet{3});
  EXPECT_EQ(ir_co(s), PointSet{3});

  const std::vector<GridPoint> antichain{{{QRational(1), QRational(0)}}, {{QRational(0), QRational(1)}}};
  try {
    check_theorem10(antichain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisFails);
  }
  const std::vector<GridPoint> ragged{{{QRational(1)}}, {{QRational(0), QRational(1)}}};
  try {
    grid_subspace(ragged);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ArityMismatch);
  }
  const std::vector<GridPoint> repeated{{{QRational(1)}}, {{QRational(1)}}};
  try {
    grid_subspace(repeated);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicatePoint);
  }
}

TEST(Grid, ClosureMatchesProductOfRays) {
  // Closures from the subspace topology of the product of left order lines,
  // generated by the boxes (-inf, b1) x (-inf, b2).
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GridPoint> pts;
    while (pts.size() < 6) {
      GridPoint p{{QRational(static_cast<long long>(rng() % 4), 3), QRational(static_cast<long long>(rng() % 4), 3)}};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<QRational> bounds;
    for (long long k = 0; k <= 4; ++k) bounds.emplace_back(k, 3);  // 4/3 acts as +inf
    std::vector<PointSet> boxes;
    for (const auto& b1 : bounds) {
      for (const auto& b2 : bounds) {
        PointSet box;
        for (PointId q = 0; q < pts.size(); ++q) {
          if (pts[q].coords[0] < b1 && pts[q].coords[1] < b2) box.insert(q);
        }
        boxes.push_back(box);
      }
    }
    const FiniteSpace s = grid_subspace(pts);
    for (PointId p = 0; p < pts.size(); ++p) {
      PointSet outside;
      for (PointSet box : boxes) {
        if (!box.contains(p)) outside |= box;
      }
      EXPECT_EQ(s.closure_of_point(p), outside.complement(pts.size()));
    }
  }
}
