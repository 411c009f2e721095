#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tverberg/geom.hpp"
#include "tverberg/graph.hpp"

namespace tverberg {

/// Signed depth of the witness in an edge's diametral ball: radius minus
/// distance to the center. Negative means outside.
struct EdgeMargin {
  Edge edge;
  double depth = 0.0;
};

struct WitnessCertificate {
  Point witness;
  std::vector<EdgeMargin> per_edge_margin;

  [[nodiscard]] double min_margin() const;
};

/// Witness for a bare family of balls; depths follow the input order.
struct BallFamilyWitness {
  Point witness;
  std::vector<double> depths;
};

/// Minimiser of q -> max_i (|q - c_i| - r_i). A common point exists iff
/// excess <= 0.
struct DeepestPoint {
  Point point;
  double excess = 0.0;
  /// False when found by numerical descent (d >= 3) rather than by exhaustive
  /// basis enumeration (d = 2).
  bool exact = true;
};

/// Planar families: enumerates every candidate basis of at most three balls
/// (centers, pairwise balance points, Apollonius points of triples) and keeps
/// the best. Other dimensions: smoothed descent with 16 starts.
DeepestPoint deepest_point(std::span<const Ball> balls);

/// Planar decision procedure; witness iff the deepest point's excess <= tol.
std::optional<BallFamilyWitness> disks_common_point(std::span<const Ball> balls, double tol = kDefaultTol);

/// Margins of a given witness against every edge of g.
WitnessCertificate certify(const PointSet& s, const GeoGraph& g, const Point& witness);

struct TverbergDecision {
  std::optional<WitnessCertificate> certificate;
  DeepestPoint deepest;
  /// Set when absence was concluded numerically (d >= 3).
  bool numerical = false;
};

/// Throws Usage on an empty edge set.
TverbergDecision decide_tverberg(const PointSet& s, const GeoGraph& g, double tol = kDefaultTol);

/// Whether the diametral balls of g's edges share a point.
std::optional<WitnessCertificate> is_tverberg_graph(const PointSet& s, const GeoGraph& g, double tol = kDefaultTol);

/// Throws Usage unless `matching` is a perfect matching of S.
std::optional<WitnessCertificate> matching_common_point(const PointSet& s, const GeoGraph& matching,
                                                        double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Alpha-lens families.

struct LensEdgeAngle {
  Edge edge;
  double angle = 0.0;  // pi when the witness is an endpoint
};

struct LensWitness {
  Point witness;
  double alpha = 0.0;
  std::vector<LensEdgeAngle> per_edge;

  [[nodiscard]] double min_angle() const;
};

struct LensSearchOptions {
  /// Grid spacing as a fraction of the larger bounding-box side of S.
  double grid_fraction = 1e-3;
  /// Grid points refined by local ascent.
  int local_starts = 16;
  /// Skip the grid when a cheap start already certifies presence.
  bool grid_only_if_needed = true;
};

struct LensDecision {
  std::optional<LensWitness> witness;
  /// min over q of max over edges (alpha - angle at q); presence iff <= tol.
  double objective = 0.0;
  Point best_point;
  /// Absence is always a numerical conclusion for lenses.
  bool numerical = true;
};

/// Maximises the smallest edge angle over the plane: fixed seeds (centroid,
/// disk witness), a grid over the bounding box of S, then pattern-search
/// ascent from the best grid cells.
LensDecision lens_family_search(const PointSet& s, const GeoGraph& g, double alpha, double tol = kDefaultTol,
                                const LensSearchOptions& options = {});

std::optional<LensWitness> lens_family_common_point(const PointSet& s, const GeoGraph& g, double alpha,
                                                    double tol = kDefaultTol, const LensSearchOptions& options = {});

// ---------------------------------------------------------------------------
// Exhaustive enumeration.

enum class EnumerationMode { Cycles, Paths };

struct CertifiedGraph {
  GeoGraph graph;
  WitnessCertificate certificate;
};

struct EnumerationReport {
  EnumerationMode mode = EnumerationMode::Cycles;
  /// (m-1)!/2 cycles or m!/2 paths.
  std::size_t total = 0;
  std::vector<CertifiedGraph> tverberg;
  /// No enumerated graph is a Tverberg graph.
  bool counterexample = false;

  [[nodiscard]] bool contains(const GeoGraph& g) const;
};

inline constexpr std::size_t kEnumerationCap = 9;

/// Every Hamiltonian cycle (m >= 3) or path (m >= 2) on S, planar, m <= 9.
/// Results are in the lexicographic order of the vertex sequences regardless
/// of `jobs`.
EnumerationReport enumerate_hamiltonian(const PointSet& s, EnumerationMode mode, double tol = kDefaultTol,
                                        unsigned jobs = 1);

}  // namespace tverberg
