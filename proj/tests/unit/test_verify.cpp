#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tverberg/error.hpp"
#include "tverberg/solver.hpp"
#include "tverberg/verify.hpp"

using namespace tverberg;

namespace {

std::vector<Ball> edge_balls(const PointSet& s, const GeoGraph& g) {
  std::vector<Ball> out;
  for (const Edge& e : g.edges()) out.push_back(diametral_ball(s[e.u], s[e.v]));
  return out;
}

}  // namespace

TEST(DisksCommonPoint, SingleBall) {
  const std::vector<Ball> b{{Point{2, 3}, 1.5}};
  const auto w = disks_common_point(b);
  ASSERT_TRUE(w);
  EXPECT_NEAR(w->depths[0], 1.5, 1e-12);
  EXPECT_NEAR(distance(w->witness, Point{2, 3}), 0.0, 1e-12);
}

TEST(DisksCommonPoint, RightIsoscelesSideDisks) {
  const std::vector<Ball> b{diametral_ball(Point{0, 0}, Point{2, 0}), diametral_ball(Point{0, 0}, Point{0, 2}),
                            diametral_ball(Point{2, 0}, Point{0, 2})};
  const auto w = disks_common_point(b);
  ASSERT_TRUE(w);
  for (const Ball& ball : b) EXPECT_GE(ball.radius - distance(w->witness, ball.center), -1e-9);
  // The foot of the altitude from the right angle is one common point.
  for (const Ball& ball : b) EXPECT_GE(ball.radius - distance(Point{1, 1}, ball.center), -1e-12);
}

TEST(DisksCommonPoint, DisjointBalls) {
  const std::vector<Ball> b{{Point{0, 0}, 1.0}, {Point{10, 0}, 1.0}};
  EXPECT_FALSE(disks_common_point(b));
  EXPECT_NEAR(deepest_point(b).excess, 4.0, 1e-9);
}

TEST(DisksCommonPoint, TangentBallsMeetAtTheContact) {
  const std::vector<Ball> b{{Point{0, 0}, 1.0}, {Point{2, 0}, 1.0}};
  const auto w = disks_common_point(b);
  ASSERT_TRUE(w);
  EXPECT_NEAR(distance(w->witness, Point{1, 0}), 0.0, 1e-9);
}

TEST(DisksCommonPoint, AgreesWithGridOracleOffTheBand) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_real_distribution<double> pos(0.2, 0.8);
  std::uniform_real_distribution<double> rad(0.05, 0.3);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<Ball> balls;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) {
      const double x = pos(rng);
      balls.push_back({Point{x, pos(rng)}, rad(rng)});
    }
    if (std::abs(deepest_point(balls).excess) < 2e-3) continue;
    ++checked;
    EXPECT_EQ(disks_common_point(balls).has_value(), oracle::grid_common_point(balls, 200)) << "family " << k;
  }
  EXPECT_GT(checked, 150);
}

TEST(DeepestPoint, ThreeDimensionalDescent) {
  const std::vector<Ball> b{{Point{0, 0, 0}, 1.0}, {Point{1.5, 0, 0}, 1.0}, {Point{0.75, 1.0, 0}, 1.0}};
  const DeepestPoint d = deepest_point(b);
  EXPECT_LT(d.excess, 0.0);
  EXPECT_FALSE(d.exact);
}

TEST(IsTverbergGraph, TriangleHasCertificate) {
  const PointSet s({Point{0, 0}, Point{3, 0.4}, Point{1.2, 2}});
  const std::vector<std::size_t> order{0, 1, 2};
  const auto c = is_tverberg_graph(s, cycle_from_order(3, order));
  ASSERT_TRUE(c);
  EXPECT_GE(c->min_margin(), -1e-9);
}

TEST(IsTverbergGraph, SquareBoundaryCycleTouchesAtCenter) {
  const PointSet s = oracle::unit_square();
  const GeoGraph g = parse_edge_list(4, "0-1,1-2,2-3,3-0");
  const WitnessCertificate at_center = certify(s, g, Point{0.5, 0.5});
  for (const EdgeMargin& m : at_center.per_edge_margin) EXPECT_NEAR(m.depth, 0.0, 1e-15);
  const auto c = is_tverberg_graph(s, g);
  ASSERT_TRUE(c);
  EXPECT_NEAR(distance(c->witness, Point{0.5, 0.5}), 0.0, 1e-6);
}

TEST(IsTverbergGraph, NonTverbergCycleMatchesEnumeration) {
  std::mt19937_64 rng(42);
  int seen = 0;
  for (int k = 0; k < 30 && seen < 5; ++k) {
    const PointSet s = oracle::random_planar(rng, 7);
    const EnumerationReport rep = enumerate_hamiltonian(s, EnumerationMode::Cycles);
    for (const GeoGraph& g : all_hamiltonian_cycles(7)) {
      if (rep.contains(g)) continue;
      EXPECT_FALSE(is_tverberg_graph(s, g));
      EXPECT_GT(deepest_point(edge_balls(s, g)).excess, 0.0);
      ++seen;
      break;
    }
  }
  EXPECT_EQ(seen, 5);
}

TEST(IsTverbergGraph, EmptyEdgeSetRejected) { EXPECT_THROW((void)decide_tverberg(oracle::unit_square(), GeoGraph(4)), Error); }

TEST(IsTverbergGraph, ThreeDimensionalPresenceIsExactForWitness) {
  const PointSet s({Point{0, 0, 0}, Point{2, 0, 0}, Point{1, 2, 0}, Point{1, 0.5, 2}});
  GeoGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const TverbergDecision d = decide_tverberg(s, g);
  ASSERT_TRUE(d.certificate);
  EXPECT_GE(oracle::min_depth(s, g, d.certificate->witness), -1e-9);
}

TEST(Enumeration, Counts) {
  const PointSet tri({Point{0, 0}, Point{3, 0.4}, Point{1.2, 2}});
  const EnumerationReport r3 = enumerate_hamiltonian(tri, EnumerationMode::Cycles);
  EXPECT_EQ(r3.total, 1u);
  EXPECT_EQ(r3.tverberg.size(), 1u);

  std::mt19937_64 rng(43);
  const PointSet five = oracle::random_planar(rng, 5);
  const EnumerationReport r5 = enumerate_hamiltonian(five, EnumerationMode::Cycles);
  EXPECT_EQ(r5.total, 12u);
  EXPECT_FALSE(r5.tverberg.empty());
  EXPECT_FALSE(r5.counterexample);

  const PointSet four = oracle::random_planar(rng, 4);
  const EnumerationReport r4 = enumerate_hamiltonian(four, EnumerationMode::Cycles);
  EXPECT_EQ(r4.total, 3u);
  EXPECT_FALSE(r4.tverberg.empty());

  EXPECT_EQ(enumerate_hamiltonian(four, EnumerationMode::Paths).total, 12u);
}

TEST(Enumeration, VerdictsMatchIndependentCheck) {
  std::mt19937_64 rng(44);
  const PointSet s = oracle::random_planar(rng, 6);
  const EnumerationReport rep = enumerate_hamiltonian(s, EnumerationMode::Cycles);
  std::size_t hits = 0;
  for (const GeoGraph& g : all_hamiltonian_cycles(6)) {
    const bool grid = oracle::grid_common_point(edge_balls(s, g), 300);
    const double excess = deepest_point(edge_balls(s, g)).excess;
    if (std::abs(excess) < 1e-3) continue;
    EXPECT_EQ(rep.contains(g), grid);
    hits += rep.contains(g) ? 1 : 0;
  }
  EXPECT_EQ(hits > 0, !rep.tverberg.empty());
}

TEST(Enumeration, ParallelOrderIsStable) {
  std::mt19937_64 rng(45);
  const PointSet s = oracle::random_planar(rng, 7);
  const EnumerationReport a = enumerate_hamiltonian(s, EnumerationMode::Cycles, kDefaultTol, 1);
  const EnumerationReport b = enumerate_hamiltonian(s, EnumerationMode::Cycles, kDefaultTol, 3);
  ASSERT_EQ(a.tverberg.size(), b.tverberg.size());
  for (std::size_t i = 0; i < a.tverberg.size(); ++i) EXPECT_TRUE(a.tverberg[i].graph.same_edges(b.tverberg[i].graph));
}

TEST(Enumeration, CapEnforced) {
  std::mt19937_64 rng(46);
  EXPECT_THROW((void)enumerate_hamiltonian(oracle::random_planar(rng, 10), EnumerationMode::Cycles), Error);
}

TEST(Matching, TwoPointsUseTheirOwnDisk) {
  const PointSet s({Point{0, 0}, Point{2, 2}});
  GeoGraph g(2);
  g.add_edge(0, 1);
  const auto c = matching_common_point(s, g);
  ASSERT_TRUE(c);
  EXPECT_GE(c->min_margin(), -1e-12);
}

TEST(Matching, SubsetOfCertifiedPathKeepsWitness) {
  std::mt19937_64 rng(47);
  const PointSet s = oracle::random_planar(rng, 6);
  const SolveResult r = solve_even_path(s, 1);
  const std::vector<std::size_t> order = traversal_order(r.graph);
  GeoGraph m(6);
  for (std::size_t i = 0; i + 1 < order.size(); i += 2) m.add_edge(order[i], order[i + 1]);
  ASSERT_TRUE(is_perfect_matching(m));
  EXPECT_TRUE(matching_common_point(s, m));
  EXPECT_GE(oracle::min_depth(s, m, r.witness), -1e-9);
}

TEST(Matching, SomeMatchingOfSixPointsIsTverberg) {
  std::mt19937_64 rng(48);
  for (int k = 0; k < 20; ++k) {
    const PointSet s = oracle::random_planar(rng, 6);
    bool any = false;
    for (const GeoGraph& g : all_perfect_matchings(6)) any = any || matching_common_point(s, g).has_value();
    EXPECT_TRUE(any);
  }
}

TEST(Matching, NonMatchingRejected) {
  EXPECT_THROW((void)matching_common_point(oracle::unit_square(), parse_edge_list(4, "0-1,1-2")), Error);
}

TEST(Lens, SquareCyclesAbsentAboveRightAngle) {
  LensSearchOptions opts;
  opts.grid_fraction = 5e-3;
  for (const GeoGraph& g : all_hamiltonian_cycles(4)) {
    const LensDecision d = lens_family_search(oracle::unit_square(), g, kHalfPi + 0.01, kDefaultTol, opts);
    EXPECT_FALSE(d.witness);
    EXPECT_GT(d.objective, 0.0);
  }
}

TEST(Lens, SquarePlusCenterCyclesAbsentAboveRightAngle) {
  LensSearchOptions opts;
  opts.grid_fraction = 5e-3;
  for (const GeoGraph& g : all_hamiltonian_cycles(5)) {
    EXPECT_FALSE(lens_family_common_point(oracle::square_with_center(), g, kHalfPi + 0.01, kDefaultTol, opts));
  }
}

TEST(Lens, RightAngleLensesAreTheDisks) {
  const GeoGraph g = parse_edge_list(4, "0-1,1-2,2-3,3-0");
  const auto w = lens_family_common_point(oracle::unit_square(), g, kHalfPi, 1e-7);
  ASSERT_TRUE(w);
  EXPECT_GE(w->min_angle(), kHalfPi - 1e-7);
}

TEST(Lens, ConvexSevenGonPresentAtTwoThirdsPi) {
  const PointSet s = oracle::regular_polygon(7);
  const SolveResult r = convex_position_cycle(s);
  const auto w = lens_family_common_point(s, r.graph, kConvexLensAlpha, 1e-7);
  ASSERT_TRUE(w);
  for (const LensEdgeAngle& e : w->per_edge) {
    EXPECT_GE(oracle::angle(w->witness.xy(), s[e.edge.u].xy(), s[e.edge.v].xy()), kConvexLensAlpha - 1e-7);
  }
}

TEST(Lens, WitnessMayBeAVertexOfS) {
  // Flat convex set: the lenses only share the middle vertex.
  const PointSet s({Point{0.73189945580098459, 0.94297025001596579}, Point{0.34780844054907301, 0.97627484631449413},
                    Point{0.18354015905664156, 0.88710873029435056}, Point{0.095854292971713162, 0.79439131694159415},
                    Point{0.065199764048193498, 0.7468780160651276}});
  const SolveResult r = convex_position_cycle(s);
  const LensDecision d = lens_family_search(s, r.graph, kConvexLensAlpha, 1e-7);
  ASSERT_TRUE(d.witness);
  EXPECT_LE(d.objective, 1e-7);
}

TEST(Lens, InvalidAlphaRejected) {
  const GeoGraph g = parse_edge_list(4, "0-1,1-2,2-3,3-0");
  EXPECT_THROW((void)lens_family_search(oracle::unit_square(), g, 0.0), Error);
  EXPECT_THROW((void)lens_family_search(oracle::unit_square(), g, kPi), Error);
}
