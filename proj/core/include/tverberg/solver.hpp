#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tverberg/cycle.hpp"
#include "tverberg/geom.hpp"
#include "tverberg/graph.hpp"
#include "tverberg/verify.hpp"

namespace tverberg {

enum class SolveMode { OddCycle, EvenPath, ConvexFast, FourPoint, BruteForceFallback };
std::string_view to_string(SolveMode mode);

/// Edge of the result with the witness's angle across it and its depth in the
/// edge's diametral ball.
struct CertificateEntry {
  Edge edge;
  double angle = 0.0;
  double depth = 0.0;
};

struct SolveStats {
  std::size_t iterations = 0;
  /// Trials started after the first one.
  std::size_t restarts = 0;
  bool perturbed = false;
  bool used_fallback = false;
};

struct SolveResult {
  GeoGraph graph;
  Point witness;
  std::vector<CertificateEntry> certificate;
  SolveMode mode = SolveMode::OddCycle;
  SolveStats stats;
  /// Filled by convex_position_cycle when lens validation is requested.
  std::optional<LensWitness> lens_witness;

  [[nodiscard]] double min_depth() const;
  [[nodiscard]] double min_angle() const;
};

/// Certificate entries of `witness` against every edge of g.
std::vector<CertificateEntry> certificate_for(const PointSet& s, const GeoGraph& g, const Point& witness);

/// Current center and plan of the ascent. When center_index is set the
/// center is that point of S and rep_dir is its representative direction.
struct SolverState {
  Vec2 p;
  std::optional<std::size_t> center_index;
  std::optional<Vec2> rep_dir;
  CyclePlan plan;
  ViolationProfile profile;
  double step = 0.0;
  std::size_t iterations = 0;
};

struct SolverConfig {
  double tol = kDefaultTol;
  std::size_t max_iters = 10000;
  std::size_t restarts = 32;
  unsigned jobs = 1;
  /// A center closer than this to a point of S is moved onto that point.
  double near_radius = 1e-7;
  /// Initial line-search step as a fraction of the circumradius of S.
  double initial_step = 0.25;
  bool brute_force_fallback = true;
  /// Called on the initial and every accepted state (sequential runs only).
  std::function<void(const SolverState&)> observer;
};

/// Representative chosen for a center that is a point of S.
struct CenterChoice {
  Vec2 rep_dir;
  CyclePlan plan;
  ViolationProfile profile;
  /// -rep_dir lies in every short arc and both pairs that involve the center
  /// after it moves off S are long, so stepping along -rep_dir widens every
  /// short arc.
  bool movable = false;
};

/// Scans every angular gap between the other projections and returns the
/// type II plan with the least ell, then movable, then the largest f.
CenterChoice handle_center_on_point(const PointSet& s, std::size_t p_index, double tol = kDefaultTol);

/// State at p, moved onto a point of S when within near_radius of it.
SolverState initial_state(const PointSet& s, Vec2 p, const SolverConfig& config);

/// One improving move toward the common intersection of the short arcs, with
/// a backtracking line search. Requires ell >= 1. Throws ArcHellyFailure when
/// no short-arc intersection exists and Stalled when the line search
/// underflows.
SolverState ascent_step(const PointSet& s, const SolverState& state, const SolverConfig& config);

/// Hamiltonian cycle for odd |S| >= 3 whose diametral disks share the witness.
SolveResult solve_odd(const PointSet& s, std::uint64_t seed, const SolverConfig& config = {});

/// Hamiltonian path for even |S| >= 2: solves S plus an auxiliary point and
/// drops that point.
SolveResult solve_even_path(const PointSet& s, std::uint64_t seed, const SolverConfig& config = {});

/// Dispatches on the parity of |S|.
SolveResult solve(const PointSet& s, std::uint64_t seed, const SolverConfig& config = {});

/// Strict convex position: every point is a hull vertex and no three are
/// collinear.
bool in_convex_position(const PointSet& s, double tol = kDefaultTol);

/// Hull vertices in clockwise order (requires convex position).
std::vector<std::size_t> clockwise_hull_order(const PointSet& s);

inline constexpr double kConvexLensAlpha = 2.0 * kPi / 3.0;

/// Closed-form cycle for odd sets in convex position; optionally searches for
/// a common point of the 2pi/3-lenses of its edges.
SolveResult convex_position_cycle(const PointSet& s, double tol = kDefaultTol, bool validate_lens = false);

/// Case analysis for four points: a point inside the triangle of the others,
/// or a convex quadrilateral split at its diagonal crossing.
SolveResult four_point_cycle(const PointSet& s, double tol = kDefaultTol);

}  // namespace tverberg
