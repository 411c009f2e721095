#pragma once

#include <optional>
#include <vector>

#include "tverberg/geom.hpp"
#include "tverberg/graph.hpp"
#include "tverberg/verify.hpp"

namespace tverberg {

using IndexSet = std::vector<std::size_t>;

struct HullsIntersection {
  Point point;
  /// Convex coefficients per part, aligned with that part's indices.
  std::vector<std::vector<double>> coefficients;
};

/// Whether the convex hulls of the parts share a point; solved as one
/// phase-one LP with the common point eliminated through the first part.
std::optional<HullsIntersection> hulls_common_point(const PointSet& s, const std::vector<IndexSet>& parts,
                                                    double tol = kDefaultTol);

struct TverbergPartition {
  std::vector<IndexSet> parts;
  Point common_point;
  std::vector<std::vector<double>> barycentric_witnesses;

  [[nodiscard]] std::size_t r() const { return parts.size(); }
  /// Index of the part holding point i.
  [[nodiscard]] std::size_t part_of(std::size_t i) const;
};

inline constexpr std::size_t kPartitionCap = 12;

/// floor((|S| - 1) / (d + 1)) + 1, the largest r Tverberg's theorem allows.
std::size_t max_tverberg_r(std::size_t m, std::size_t d);

/// First partition into r nonempty parts, in restricted-growth-string order,
/// whose hulls intersect. Requires |S| >= (r-1)(d+1)+1 and |S| <= 12.
TverbergPartition tverberg_partition(const PointSet& s, std::size_t r, double tol = kDefaultTol, unsigned jobs = 1);

/// Half-space {x : <x, normal> <= offset} through p with inward normal q - p.
/// Every x in it sees q and p at a right or obtuse angle from p.
struct HalfSpace {
  std::vector<double> normal;
  double offset = 0.0;

  [[nodiscard]] double signed_excess(const Point& x) const;
};

HalfSpace obtuse_half_space(const Point& q, const Point& p);

struct Theorem3Result {
  GeoGraph graph;
  TverbergPartition partition;
  WitnessCertificate certificate;
};

/// Joins every q to the point of each part that lies deepest in the
/// half-space opposite q as seen from the partition point p.
Theorem3Result theorem3_graph(const PointSet& s, std::size_t r, double tol = kDefaultTol, unsigned jobs = 1);

/// Same construction for a partition already at hand.
Theorem3Result theorem3_graph(const PointSet& s, const TverbergPartition& partition, double tol = kDefaultTol);

/// min degree of g >= |S| / (d + 1).
bool min_degree_check(const GeoGraph& g, const PointSet& s, std::size_t d);

}  // namespace tverberg
