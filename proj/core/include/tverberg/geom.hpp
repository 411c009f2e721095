#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tverberg {

/// Absolute tolerance shared by every predicate: radians for angles, length
/// units for signed distances.
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// ---------------------------------------------------------------------------
// Planar vector used by all the two-dimensional machinery.

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
inline Vec2 direction_at(double radians) { return {std::cos(radians), std::sin(radians)}; }

/// Unsigned angle between two nonzero vectors, in [0, pi]. Uses atan2 of the
/// cross and dot products, which stays accurate near 0 and pi.
inline double angle_between(Vec2 a, Vec2 b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); }

// ---------------------------------------------------------------------------
// d-dimensional point.

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);
  explicit Point(Vec2 v) : Point({v.x, v.y}) {}

  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  [[nodiscard]] std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] double x() const { return coords_[0]; }
  [[nodiscard]] double y() const { return coords_[1]; }
  /// Requires dim() == 2.
  [[nodiscard]] Vec2 xy() const { return {coords_[0], coords_[1]}; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);
double dot(const Point& a, const Point& b);
double norm(const Point& a);
double distance(const Point& a, const Point& b);
Point midpoint(const Point& a, const Point& b);
std::string to_string(const Point& p);

/// Ordered list of distinct points of a common dimension. Index identity is
/// the vertex identity used by every graph in the library.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);
  static PointSet planar(std::span<const Vec2> points);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] auto begin() const { return points_.begin(); }
  [[nodiscard]] auto end() const { return points_.end(); }

  /// Requires dim() == 2.
  [[nodiscard]] std::vector<Vec2> planar_coords() const;
  [[nodiscard]] Point centroid() const;
  /// Largest distance from the centroid; the natural length scale of the set.
  [[nodiscard]] double circumradius() const;

 private:
  std::vector<Point> points_;
  std::size_t dim_ = 0;
};

struct Segment {
  std::size_t a;
  std::size_t b;
};

struct Ball {
  Point center;
  double radius = 0.0;
};

/// The closed set {z : angle x z y >= alpha}, endpoints given as indices into
/// the owning point set.
struct Lens {
  Lens(std::size_t a, std::size_t b, double alpha);

  std::size_t a;
  std::size_t b;
  double alpha;
};

enum class Membership { Inside, Boundary, Outside };
std::string_view to_string(Membership m);
/// Inside or on the boundary.
constexpr bool in_closed(Membership m) { return m != Membership::Outside; }

// ---------------------------------------------------------------------------
// Predicates.

/// Angle x-vertex-y in [0, pi]. Throws UndefinedAngle when a or b equals the
/// vertex.
double angle_at(const Point& vertex, const Point& a, const Point& b);

/// Throws DegenerateSegment when x == y.
Ball diametral_ball(const Point& x, const Point& y);

/// Signed depth of p in the ball: radius minus distance to the center.
double ball_depth(const Ball& ball, const Point& p);

/// Classifies p against D(x, y) by the Thales angle test; an endpoint counts
/// as inside.
Membership in_diametral_ball(const Point& p, const Point& x, const Point& y, double tol = kDefaultTol);

/// Classifies p against the alpha-lens on S[lens.a], S[lens.b].
Membership in_lens(const Point& p, const Lens& lens, const PointSet& s, double tol = kDefaultTol);

/// Angle-threshold classification shared by in_diametral_ball and in_lens.
Membership classify_angle(const Point& p, const Point& x, const Point& y, double alpha, double tol);

// ---------------------------------------------------------------------------
// General position.

struct CollinearTriple {
  std::array<std::size_t, 3> points;  // sorted
  friend bool operator==(const CollinearTriple&, const CollinearTriple&) = default;
  friend auto operator<=>(const CollinearTriple&, const CollinearTriple&) = default;
};

struct BoundaryIncidence {
  std::size_t point;
  std::array<std::size_t, 2> pair;  // sorted
  friend bool operator==(const BoundaryIncidence&, const BoundaryIncidence&) = default;
  friend auto operator<=>(const BoundaryIncidence&, const BoundaryIncidence&) = default;
};

struct TripleBoundaryMeet {
  std::array<std::array<std::size_t, 2>, 3> pairs;  // each sorted, list sorted
  friend bool operator==(const TripleBoundaryMeet&, const TripleBoundaryMeet&) = default;
  friend auto operator<=>(const TripleBoundaryMeet&, const TripleBoundaryMeet&) = default;
};

struct TangentPair {
  std::array<std::array<std::size_t, 2>, 2> pairs;  // each sorted, list sorted
  friend bool operator==(const TangentPair&, const TangentPair&) = default;
  friend auto operator<=>(const TangentPair&, const TangentPair&) = default;
};

struct GeneralPositionReport {
  std::vector<CollinearTriple> collinear_triples;
  std::vector<BoundaryIncidence> boundary_incidences;
  std::vector<TripleBoundaryMeet> triple_boundary_meets;
  std::vector<TangentPair> tangent_pairs;

  [[nodiscard]] bool empty() const {
    return collinear_triples.empty() && boundary_incidences.empty() && triple_boundary_meets.empty() &&
           tangent_pairs.empty();
  }
  [[nodiscard]] std::size_t violation_count() const {
    return collinear_triples.size() + boundary_incidences.size() + triple_boundary_meets.size() +
           tangent_pairs.size();
  }
};

/// Local checks only collinear triples and points on another pair's diametral
/// circle (cubic time); Full adds the circle-pair conditions.
enum class GpLevel { Local, Full };

/// Enumerates every violation of the planar general-position conditions:
/// collinear triples, points on another pair's diametral circle, three
/// diametral circles through one point when their pairs share no common
/// point, and tangent diametral circles. For d > 2 only collinearity is
/// checked. Entries are canonicalised (sorted indices, sorted lists).
GeneralPositionReport check_general_position(const PointSet& s, double tol = kDefaultTol,
                                             GpLevel level = GpLevel::Full);

bool in_general_position(const PointSet& s, double tol = kDefaultTol, GpLevel level = GpLevel::Full);

/// Moves every point uniformly inside its delta-ball until the set passes
/// check_general_position, retrying the whole set up to kPerturbRetries times.
/// Deterministic for a fixed seed.
PointSet perturb(const PointSet& s, double delta, std::uint64_t seed, double tol = kDefaultTol,
                 GpLevel level = GpLevel::Full);
inline constexpr int kPerturbRetries = 64;

}  // namespace tverberg
