#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tverberg/error.hpp"
#include "tverberg/highdim.hpp"
#include "tverberg/simplex.hpp"

using namespace tverberg;

namespace {

// Every part's coefficients rebuild the common point.
void expect_sound(const PointSet& s, const std::vector<IndexSet>& parts, const HullsIntersection& h) {
  ASSERT_EQ(h.coefficients.size(), parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::vector<double> x(s.dim(), 0.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < parts[j].size(); ++k) {
      const double lam = h.coefficients[j][k];
      EXPECT_GE(lam, -1e-9);
      sum += lam;
      for (std::size_t c = 0; c < s.dim(); ++c) x[c] += lam * s[parts[j][k]][c];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
    for (std::size_t c = 0; c < s.dim(); ++c) EXPECT_NEAR(x[c], h.point[c], 1e-8);
  }
}

void expect_covering(const PointSet& s, const Theorem3Result& t) {
  for (const Edge& e : t.graph.edges()) EXPECT_LE(oracle::ball_dot(t.partition.common_point, s[e.u], s[e.v]), 1e-9);
  for (std::size_t q = 0; q < s.size(); ++q) {
    for (const IndexSet& part : t.partition.parts) {
      bool hit = part.size() == 1 && part.front() == q;
      for (std::size_t x : part) hit = hit || t.graph.has_edge(q, x);
      EXPECT_TRUE(hit) << "vertex " << q;
    }
  }
}

}  // namespace

TEST(Simplex, FeasibleAndInfeasible) {
  // x + y = 1, x - y = 0.
  const auto x = feasible_point({{1, 1}, {1, -1}}, {1, 0});
  ASSERT_TRUE(x);
  EXPECT_NEAR((*x)[0], 0.5, 1e-12);
  EXPECT_NEAR((*x)[1], 0.5, 1e-12);
  // x + y = -1 with x, y >= 0.
  EXPECT_FALSE(feasible_point({{1, 1}}, {-1}));
}

TEST(Simplex, AgreesWithBasicSolutionEnumeration) {
  // Two equations in four unknowns: feasible iff some 2x2 basis gives a
  // nonnegative solution.
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int feasible = 0;
  for (int k = 0; k < 400; ++k) {
    Matrix a(2, std::vector<double>(4));
    for (auto& row : a) {
      for (double& v : row) v = u(rng);
    }
    const std::vector<double> b{u(rng), u(rng)};
    bool basic = false;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const double det = a[0][i] * a[1][j] - a[0][j] * a[1][i];
        if (std::abs(det) < 1e-9) continue;
        const double xi = (b[0] * a[1][j] - a[0][j] * b[1]) / det;
        const double xj = (a[0][i] * b[1] - b[0] * a[1][i]) / det;
        basic = basic || (xi >= -1e-12 && xj >= -1e-12);
      }
    }
    const auto x = feasible_point(a, b);
    EXPECT_EQ(x.has_value(), basic) << "system " << k;
    if (x) {
      feasible += 1;
      for (int r = 0; r < 2; ++r) {
        double lhs = 0.0;
        for (int c = 0; c < 4; ++c) lhs += a[r][c] * (*x)[c];
        EXPECT_NEAR(lhs, b[r], 1e-9);
      }
      for (double v : *x) EXPECT_GE(v, -1e-12);
    }
  }
  EXPECT_GT(feasible, 50);
  EXPECT_LT(feasible, 400);
}

TEST(HullsCommonPoint, SegmentPairsMatchCrossingTest) {
  std::mt19937_64 rng(60);
  for (int k = 0; k < 300; ++k) {
    const PointSet s = oracle::random_planar(rng, 4);
    const bool cross = oracle::segments_cross(s[0].xy(), s[1].xy(), s[2].xy(), s[3].xy());
    const std::vector<IndexSet> parts{{0, 1}, {2, 3}};
    const auto h = hulls_common_point(s, parts);
    EXPECT_EQ(h.has_value(), cross) << "case " << k;
    if (h) expect_sound(s, parts, *h);
  }
}

TEST(HullsCommonPoint, SquareDiagonals) {
  const PointSet s({Point{0, 0}, Point{1, 1}, Point{1, 0}, Point{0, 1}});
  const std::vector<IndexSet> parts{{0, 1}, {2, 3}};
  const auto h = hulls_common_point(s, parts);
  ASSERT_TRUE(h);
  EXPECT_NEAR(h->point[0], 0.5, 1e-12);
  EXPECT_NEAR(h->point[1], 0.5, 1e-12);
  for (const auto& c : h->coefficients) {
    EXPECT_NEAR(c[0], 0.5, 1e-12);
    EXPECT_NEAR(c[1], 0.5, 1e-12);
  }
}

TEST(HullsCommonPoint, PointInsideTriangle) {
  const PointSet s({Point{1, 0.5}, Point{0, 0}, Point{4, 0}, Point{0, 4}});
  const std::vector<IndexSet> parts{{0}, {1, 2, 3}};
  const auto h = hulls_common_point(s, parts);
  ASSERT_TRUE(h);
  EXPECT_NEAR(h->point[0], 1.0, 1e-12);
  EXPECT_NEAR(h->point[1], 0.5, 1e-12);
  expect_sound(s, parts, *h);
}

TEST(HullsCommonPoint, ParallelSegmentsAreDisjoint) {
  const PointSet s({Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}});
  EXPECT_FALSE(hulls_common_point(s, {{0, 1}, {2, 3}}));
}

TEST(HullsCommonPoint, BadPartsRejected) {
  const PointSet s = oracle::unit_square();
  EXPECT_THROW((void)hulls_common_point(s, {}), Error);
  EXPECT_THROW((void)hulls_common_point(s, {{0, 1}, {1, 2}}), Error);
  EXPECT_THROW((void)hulls_common_point(s, {{0, 7}}), Error);
}

TEST(TverbergPartition, RadonInThePlane) {
  std::mt19937_64 rng(62);
  for (int k = 0; k < 20; ++k) {
    const PointSet s = oracle::random_planar(rng, 4);
    const TverbergPartition p = tverberg_partition(s, 2);
    EXPECT_EQ(p.r(), 2u);
    const auto h = hulls_common_point(s, p.parts);
    ASSERT_TRUE(h);
    expect_sound(s, p.parts, HullsIntersection{p.common_point, p.barycentric_witnesses});
  }
}

TEST(TverbergPartition, ThreePartsOfSevenPlanarPoints) {
  std::mt19937_64 rng(63);
  for (int k = 0; k < 10; ++k) {
    const PointSet s = oracle::random_points(rng, 7, 2);
    const TverbergPartition p = tverberg_partition(s, 3);
    EXPECT_EQ(p.r(), 3u);
    std::vector<int> seen(7, 0);
    for (const IndexSet& part : p.parts) {
      EXPECT_FALSE(part.empty());
      for (std::size_t i : part) ++seen[i];
    }
    for (int c : seen) EXPECT_EQ(c, 1);
    expect_sound(s, p.parts, HullsIntersection{p.common_point, p.barycentric_witnesses});
    for (std::size_t i = 0; i < 7; ++i) {
      const IndexSet& part = p.parts[p.part_of(i)];
      EXPECT_NE(std::find(part.begin(), part.end(), i), part.end());
    }
  }
}

TEST(TverbergPartition, RadonInSpace) {
  std::mt19937_64 rng(64);
  const PointSet s = oracle::random_points(rng, 5, 3);
  const TverbergPartition p = tverberg_partition(s, 2);
  expect_sound(s, p.parts, HullsIntersection{p.common_point, p.barycentric_witnesses});
}

TEST(TverbergPartition, ParallelSearchReturnsTheFirstPartition) {
  std::mt19937_64 rng(65);
  const PointSet s = oracle::random_points(rng, 9, 2);
  const TverbergPartition a = tverberg_partition(s, 3, kDefaultTol, 1);
  const TverbergPartition b = tverberg_partition(s, 3, kDefaultTol, 3);
  EXPECT_EQ(a.parts, b.parts);
}

TEST(TverbergPartition, Preconditions) {
  std::mt19937_64 rng(66);
  EXPECT_THROW((void)tverberg_partition(oracle::random_points(rng, 6, 2), 3), Error);
  EXPECT_THROW((void)tverberg_partition(oracle::random_points(rng, 13, 2), 2), Error);
  EXPECT_THROW((void)tverberg_partition(oracle::random_points(rng, 4, 2), 0), Error);
  EXPECT_EQ(max_tverberg_r(7, 2), 3u);
  EXPECT_EQ(max_tverberg_r(9, 3), 3u);
  EXPECT_EQ(max_tverberg_r(1, 5), 1u);
}

TEST(HalfSpace, ObtuseSideOfP) {
  const Point q{2, 0};
  const Point p{0, 0};
  const HalfSpace h = obtuse_half_space(q, p);
  EXPECT_LE(h.signed_excess(Point{-1, 3}), 0.0);
  EXPECT_GT(h.signed_excess(Point{1, 0}), 0.0);
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 500; ++k) {
    const Point x{u(rng), u(rng)};
    if (h.signed_excess(x) <= 0.0) EXPECT_LE(oracle::ball_dot(p, q, x), 1e-12);
  }
  EXPECT_THROW((void)obtuse_half_space(p, p), Error);
}

TEST(Theorem3, SquareRadonByDiagonals) {
  const PointSet s = oracle::unit_square();
  const TverbergPartition part{{{0, 2}, {1, 3}}, Point{0.5, 0.5}, {{0.5, 0.5}, {0.5, 0.5}}};
  const Theorem3Result t = theorem3_graph(s, part);
  expect_covering(s, t);
  EXPECT_TRUE(t.graph.has_edge(0, 1) || t.graph.has_edge(0, 3));
  EXPECT_GE(t.certificate.min_margin(), -1e-9);
}

TEST(Theorem3, SevenPointsThreeParts) {
  std::mt19937_64 rng(68);
  for (int k = 0; k < 10; ++k) {
    const PointSet s = oracle::random_points(rng, 7, 2);
    const Theorem3Result t = theorem3_graph(s, 3);
    expect_covering(s, t);
    EXPECT_GE(t.graph.min_degree(), 3u);
    EXPECT_TRUE(min_degree_check(t.graph, s, 2));
  }
}

TEST(Theorem3, NinePointsInThePlane) {
  std::mt19937_64 rng(69);
  const PointSet s = oracle::random_points(rng, 9, 2);
  const Theorem3Result t = theorem3_graph(s, 3);
  expect_covering(s, t);
  EXPECT_GE(t.graph.min_degree(), 3u);
}

TEST(Theorem3, SinglePartGivesEveryPointAnEdge) {
  std::mt19937_64 rng(70);
  const PointSet s = oracle::random_points(rng, 5, 3);
  const Theorem3Result t = theorem3_graph(s, 1);
  EXPECT_GT(t.graph.edge_count(), 0u);
  for (std::size_t q = 0; q < 5; ++q) EXPECT_GE(t.graph.degree(q), 1u);
  expect_covering(s, t);
}

TEST(MinDegree, Examples) {
  const PointSet two({Point{0.0}, Point{1.0}});
  GeoGraph g(2);
  g.add_edge(0, 1);
  EXPECT_TRUE(min_degree_check(g, two, 1));
  const PointSet four = oracle::unit_square();
  const GeoGraph path = parse_edge_list(4, "0-1,1-2,2-3");
  EXPECT_TRUE(min_degree_check(path, four, 3));
  EXPECT_FALSE(min_degree_check(path, four, 2));
}
