#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tverberg/geom.hpp"
#include "tverberg/graph.hpp"

namespace tverberg {

/// Clockwise angular key of a direction, in [0, 2pi). Increasing key means
/// moving clockwise (decreasing atan2); key 0 is the -x direction.
double clockwise_key(Vec2 dir);

/// Clockwise sweep from `from` to `to`, in [0, 2pi).
double clockwise_sweep(Vec2 from, Vec2 to);

/// Projections of S onto the unit circle around a center, listed clockwise.
struct RadialOrder {
  Vec2 center;
  /// Set when the center is a point of S (type II); that point then occupies
  /// the last slot and is represented by representative_dir.
  std::optional<std::size_t> center_index;
  std::optional<Vec2> representative_dir;
  /// Point index per slot: x_1..x_m in the clockwise order.
  std::vector<std::size_t> labels;
  /// Unit direction per slot.
  std::vector<Vec2> directions;

  [[nodiscard]] std::size_t size() const { return labels.size(); }
};

/// Clockwise radial order of S around p. For the type I order (rep_dir empty)
/// labels[0] is the point with the largest atan2. With rep_dir, p must be a
/// point of S; the order starts at the first projection clockwise after
/// rep_dir and ends with p itself. Throws RadialDegeneracy on angular ties and
/// RepresentativeDegeneracy when rep_dir coincides with a projection.
RadialOrder radial_order(const PointSet& s, Vec2 p, std::optional<Vec2> rep_dir, double tol = kDefaultTol);

enum class CycleKind { TypeI, TypeII };

struct CyclePlan {
  RadialOrder order;
  GeoGraph cycle;
  CycleKind kind = CycleKind::TypeI;

  /// n for |S| = 2n + 1.
  [[nodiscard]] std::size_t half() const { return (order.size() - 1) / 2; }
};

/// Joins x_i to x_{i+n} and x_{i+n+1} (indices mod 2n+1) around p, p not in S.
CyclePlan type1_cycle(const PointSet& s, Vec2 p, double tol = kDefaultTol);

/// Same construction when the center is S[p_index], represented on the unit
/// circle by rep_dir.
CyclePlan type2_cycle(const PointSet& s, std::size_t p_index, Vec2 rep_dir, double tol = kDefaultTol);

/// Closed minor arc on the unit circle around `center`, swept clockwise from
/// start_dir to end_dir.
class Arc {
 public:
  /// The minor arc between two directions, stored canonically.
  static Arc between(Vec2 center, Vec2 a, Vec2 b);
  /// The arc starting at `start` and sweeping `measure` radians clockwise.
  static Arc clockwise(Vec2 center, Vec2 start, double measure);

  [[nodiscard]] Vec2 center() const { return center_; }
  [[nodiscard]] Vec2 start_dir() const { return start_; }
  [[nodiscard]] Vec2 end_dir() const { return end_; }
  [[nodiscard]] double measure() const { return measure_; }
  [[nodiscard]] Vec2 midpoint_dir() const;
  /// Direction at clockwise offset t in [0, measure] from the start.
  [[nodiscard]] Vec2 direction_at_offset(double t) const;
  /// Closed-arc membership with angular slack tol.
  [[nodiscard]] bool contains(Vec2 dir, double tol = kDefaultTol) const;

 private:
  friend std::optional<Arc> arcs_common_intersection(std::span<const Arc> arcs);
  Arc(Vec2 center, Vec2 start, Vec2 end, double measure) : center_(center), start_(start), end_(end), measure_(measure) {}

  Vec2 center_;
  Vec2 start_;
  Vec2 end_;
  double measure_ = 0.0;
};

/// One checked pair (x_i, x_{i+n}) of a plan, slots 0-based.
struct PairAngle {
  std::size_t slot_a = 0;
  std::size_t slot_b = 0;
  double angle = 0.0;
};

struct ViolationProfile {
  /// Number of checked pairs whose angle is below pi/2 - tol.
  int ell = 0;
  /// Sum of those angles.
  double f = 0.0;
  std::vector<Arc> short_arcs;
  std::vector<PairAngle> short_pairs;
  /// Pairs within tol of pi/2; never counted in ell.
  int boundary_count = 0;
  /// Every checked pair, in slot order.
  std::vector<PairAngle> pairs;
};

/// Lexicographic comparison on (ell, -f): true when a is strictly better.
bool better_profile(const ViolationProfile& a, const ViolationProfile& b);

/// Evaluates ell and f for a plan. Type I checks every slot i; type II skips
/// the two pairs that have the representative slot as an endpoint.
ViolationProfile violation_profile(const CyclePlan& plan, double tol = kDefaultTol);

/// Common intersection of minor arcs on one circle, or nullopt if empty (or if
/// the arcs cover the whole circle).
std::optional<Arc> arcs_common_intersection(std::span<const Arc> arcs);

/// Slots of the order whose direction lies in the arc, extremes included.
std::size_t slots_in_arc(const RadialOrder& order, const Arc& arc, double tol = kDefaultTol);

}  // namespace tverberg
